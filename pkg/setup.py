import codecs
import os

from setuptools import setup, find_packages


def read(*parts):
    return codecs.open(os.path.join(os.path.abspath(os.path.dirname(__file__)), *parts), 'r', 'utf-8').read()


long_description = read('README.md')


setup(
    name='kenstat',
    version='0.1.0',
    description='Numerical verification of curvature identities and Chen-Ricci bounds on Kenmotsu statistical manifolds',
    long_description=long_description,
    long_description_content_type='text/markdown',
    keywords='statistical manifold kenmotsu curvature submanifold chen-ricci verification',
    license='MIT',
    packages=find_packages(exclude=('tests', 'examples', 'examples.*')),
    python_requires='>=3.7',
    install_requires=[
        'numpy>=1.17',
    ],
    extras_require={
        'test': [
            'pytest>=6',
            'hypothesis>=6',
        ],
    },
    entry_points={
        'console_scripts': [
            'kenstat=kenstat:main'
        ]
    }
)
