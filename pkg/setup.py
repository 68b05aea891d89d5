from setuptools import setup, find_packages

setup(
    name="groupdet",
    version="1.0.0",
    description="Group determinants of finite abelian groups and the integer group determinants of C8xC2",
    author="groupdet developers",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    install_requires=[
        "sympy>=1.12",
        "numpy>=1.24",
    ],
    entry_points={
        "console_scripts": [
            "groupdet=groupdet.main:main",
        ],
    },
    python_requires=">=3.8",
)
