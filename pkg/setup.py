from setuptools import setup

setup(
    name='maxtsp-seven-ninths',
    version='0.1.0',
    description='Deterministic 7/9-approximation for the symmetric Maximum TSP with certificates',
    package_dir={'': 'src'},
    packages=['core', 'utils', 'cli'],
    python_requires='>=3.8',
    install_requires=['networkx>=2.6'],
    extras_require={'test': ['pytest>=7.0']},
    entry_points={'console_scripts': ['maxtsp=cli.main:main']},
)
