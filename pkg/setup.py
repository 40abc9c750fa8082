# setup.py
from setuptools import setup, find_packages

setup(
    name="paley-zn",
    version="1.0.0",
    description="Paley-type graphs on Z_n with exact K3/K4 clique counts and their verification",
    author="Your Name",
    packages=find_packages(exclude=["tests"]),
    install_requires=[
        "Pillow>=9.5.0",
        "reportlab>=3.6.0",
        "sympy>=1.12",
    ],
    extras_require={
        'test': [
            "pytest>=7.4",
            "hypothesis>=6.80",
            "networkx>=3.1",
        ],
    },
    entry_points={
        'console_scripts': [
            'paley-zn=paley_zn.main:main',
        ],
    },
    python_requires='>=3.10',
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
)
