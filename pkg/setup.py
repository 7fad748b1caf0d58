from setuptools import setup

readme = open('README.rst').read()
history = open('CHANGES.rst').read().replace('.. :changelog:', '')

setup(
    name='twinlab',
    version='0.1.0.dev0',
    description='Desk-scale verifier for Z-realizations of twin buildings '
                'and the finiteness properties of Kac-Moody groups',
    long_description=readme + '\n\n' + history,
    long_description_content_type='text/x-rst',
    license="MIT",
    packages=['twinlab'],
    package_data={'twinlab': ['systems/*.json']},
    python_requires='>=3.9',
    install_requires=[
        'networkx>=2.5',
        'packaging',
    ],
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    entry_points={
        'console_scripts': [
            'twinlab = twinlab.cli:main',
        ]
    },
)
