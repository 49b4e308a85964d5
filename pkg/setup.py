from setuptools import setup

test_deps = [
    'pytest',
    'pytest-cov',
    'pytest-runner',
]

extras = {
    'test': test_deps
}

from os import path
this_directory = path.abspath(path.dirname(__file__))
with open(path.join(this_directory, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()
with open('requirements.txt') as f:
    required = f.read().splitlines()

setup(
    name='plaidcloud-coxeter',
    version="0.1.0",
    author='Paul Morel',
    author_email='paul.morel@tartansolutions.com',
    packages=['plaidcloud.coxeter', 'plaidcloud.coxeter.cli'],
    install_requires=required,
    tests_require=test_deps,
    setup_requires=['pytest-runner'],
    extras_require=extras,
    entry_points={
        'console_scripts': ['coxeter = plaidcloud.coxeter.cli.runner:main'],
    },
    python_requires='>=3.9',
    long_description=long_description,
    long_description_content_type='text/markdown',
)
