#! /usr/bin/env python
"""
Set up for the module
"""

from setuptools import setup, find_packages
import os


requirements = [
    'numpy>=1.24',
    'pandas>=2.0',
    'scipy>=1.10',
]

# Get the current directory
current_dir = os.path.abspath(os.path.dirname(__file__))

# Read the contents of the README.md file
with open(os.path.join(current_dir, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

setup(
    name='greedybasislab',
    version='0.1.0',
    description='Finite-dimensional laboratory for the thresholding greedy algorithm: quasi-greedy and suppression unconditional constants with certificates',
    long_description=long_description,
    long_description_content_type='text/markdown',
    packages=find_packages(exclude=['tests']),
    install_requires=requirements,
    extras_require={
        'dev': ['pytest>=7.4', 'hypothesis>=6.80', 'pylint>=3.0'],
    },
    python_requires='>=3.10',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3.11',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    package_data={
        'greedybasislab': ['data/*.json']
    },
    include_package_data=True,
    entry_points={
        'console_scripts': ['gbl = greedybasislab.cli.main:main'],
    },
)
