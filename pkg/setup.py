from setuptools import setup, find_packages

import importlib.util

spec = importlib.util.spec_from_file_location('nttkern.version',
                                              'nttkern/version.py')
version = importlib.util.module_from_spec(spec)
spec.loader.exec_module(version)

setup(
    name='nttkern',
    version=version.version,
    description="Modular reduction kernels, butterflies and number "
                "theoretic transforms for lattice cryptography",
    packages=find_packages(exclude=['tests']),
    classifiers=[
        "License :: OSI Approved :: ISC License (ISCL)",
        "Programming Language :: Python",
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Developers",
        "Intended Audience :: Science/Research",
        "Topic :: Security :: Cryptography",
        "Programming Language :: Python :: 3",
    ],
    keywords='ntt montgomery plantard modular reduction lattice',
    license='ISC',
    python_requires='>=3.8',
    install_requires=[
        'anyconfig',
        'colorama',
        'docopt',
        'joblib',
        'jsonschema',
        'numpy',
        'pandas',
        'progressbar2',
        'pyyaml',
        'sympy',
    ],
    extras_require={
        'docs': ['numpydoc'],
        'tests': ['pytest', 'hypothesis'],
    }
)
