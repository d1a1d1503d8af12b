from setuptools import setup, find_packages

setup(
    name="hrs-tilt-engine",
    version="1.0.0",
    description="Certificates for finitely generated abelian groups, tilted hearts and almost-hereditary detection",
    packages=find_packages(exclude=["tests", "tests.*"]),
    include_package_data=True,
    python_requires=">=3.9",
    install_requires=[
        "python-dotenv>=0.15.0",
        "sympy>=1.14",
        "numpy>=1.24",
        "pydantic>=2.0",
        "structlog>=23.1",
        "tabulate>=0.9",
    ],
    extras_require={
        "dev": [
            "pytest>=6.2.0",
            "pytest-mock>=3.5.0",
            "pytest-cov>=2.12.0",
            "hypothesis>=6.0",
            "black>=21.5b2",
            "flake8>=3.9.0",
            "mypy>=0.812",
        ],
    },
    entry_points={
        "console_scripts": [
            "hrs-tilt=src.cli.main:main",
        ],
    },
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
