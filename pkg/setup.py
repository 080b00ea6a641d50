from setuptools import setup, find_packages

setup(name="usgt",
      version="1.0.0",
      description="A tiny library for normalized Laplacian Estrada indices "
                  "and spectral decimation on treelike fractals",
      license="MIT",
      packages=find_packages(exclude=["tests"]),
      python_requires=">=3.6",
      install_requires=["numpy", "networkx"],
      extras_require={"test": ["hypothesis"]},
      entry_points={"console_scripts": ["usgt=usgt.cli:main"]},
      zip_safe=False)
