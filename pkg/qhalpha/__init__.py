__all__ = ['exceptions', 'partitions', 'schur_oracle', 'seidel', 'deform',
           'exhibits', 'converters', 'QuantumRing', 'RingParams', 'QClass']

from .QuantumRing import QuantumRing, RingParams, QClass
