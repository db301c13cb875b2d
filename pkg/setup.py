from setuptools import setup, find_packages

setup(
    name="hyperspec",
    version="1.0.0",
    packages=find_packages(exclude=["examples", "examples.*"]),
    install_requires=[
        line.strip()
        for line in open('requirements.txt').readlines()
        if line.strip() and not line.startswith('#')
    ],
    entry_points={
        "console_scripts": ["hyperspec=hyperspec.cli:main_exit"],
    },
)
