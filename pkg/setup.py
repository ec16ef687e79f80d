#!/usr/bin/env python


from setuptools import setup

import dmrm


# Hack to prevent stupid TypeError: 'NoneType' object is not callable error on
# exit of python setup.py test in multiprocessing/util.py _exit_function when
# running python setup.py test (see
# http://www.eby-sarna.com/pipermail/peak/2010-May/003357.html)
import multiprocessing
multiprocessing

setup(
    name='dmrm',
    version=dmrm.__version__,
    description=(
        'Reduced density matrices of valence-bond dimer states on '
        'multi-leg spin ladders, with entanglement measures.'
    ),
    long_description=open('README.rst').read(),
    license='Apache Software License, version 2.0',

    author='Ecometrica',
    author_email='software@ecometrica.com',

    packages=['dmrm'],
    package_data={'dmrm': ['schemas/*.json']},
    include_package_data=True,

    install_requires=[
        'numexpr',
        'numpy',
        'scipy',
    ],

    extras_require={
        "tests": [
            "pytest",
        ],
        # Only needed to run the generated plot_sweep.py
        "plot": [
            "matplotlib",
        ],
    },

    entry_points={
        'console_scripts': [
            'dmrm = dmrm.main:main',
        ]
    },

    classifiers=[
        'Development Status :: 4 - Beta',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Operating System :: POSIX',
        'Programming Language :: Python :: 3.6',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8',
        'Topic :: Scientific/Engineering :: Physics',
    ],

    zip_safe=False,
)
