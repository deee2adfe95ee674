from setuptools import setup, find_packages

setup(
    name = "qhalpha",
    version = "0.1.0",
    packages = find_packages(exclude=['tests', 'examples', 'examples.*']),
    python_requires = '>=3.8',
    install_requires = [
        'coverage>=5',
        'hypothesis>=6',
        'pandas>=1.0',
        'sympy>=1.12',
    ],
    scripts = ['scripts/qhalpha_cli.py'],

    description = "Quantum deformations QH_alpha of Grassmannian cohomology "
                  "and their positivity",
    license = "MIT",
    keywords = "quantum cohomology Grassmannian Schubert calculus Pieri Seidel",
)
