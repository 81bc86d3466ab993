from setuptools import setup, find_packages


with open("README.md", "r") as f:
    long_description = f.read()

setup(name='khrot',
      version='0.1.0',
      description='Local Khovanov homology of alternating tangles with rotation numbers',
      long_description=long_description,
      long_description_content_type="text/markdown",
      author='khrot contributors',
      license='MIT',
      classifiers=[
          'Development Status :: 3 - Alpha',
          'License :: OSI Approved :: MIT License',
          'Programming Language :: Python :: 3.8',
          'Programming Language :: Python :: 3.9',
          'Programming Language :: Python :: 3.10',
          'Topic :: Scientific/Engineering :: Mathematics'
      ],
      packages=find_packages(exclude=['docs', 'test', 'examples', "*.test", "*.test.*"]),
      package_data={'khrot': ['data/*.tsv']},
      install_requires=[
          'sympy>=1.9'
      ],
      extras_require={
          'test': ['pytest>=6.0', 'hypothesis>=6.0'],
      },
      entry_points={
          'console_scripts': ['khrot = khrot.cli:main'],
      },
      zip_safe=False)
