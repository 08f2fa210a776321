"""
topocheck: finite topology engine and claim checker.

topocheck enumerates the topologies on small ground sets, computes the
generalized open and closed set classes of a space, decides the separation
axioms built on them and checks registered implications, equivalences and
fixture assertions exhaustively, reporting a witness for every refutation.
"""

from setuptools import setup

import topocheck

doclines = __doc__.split("\n")

setup(name='topocheck',
      version=topocheck.version,
      description='Finite topology engine and claim checker for generalized closed sets.',
      long_description='\n'.join(doclines[2:]),
      author='topocheck contributors',
      license='MIT',
      platforms=["any"],
      install_requires=["six", "enum34; python_version < '3.4'"],
      tests_require=['nose', 'mock'],
      test_suite='nose.collector',
      packages=['topocheck'],
      package_data={'topocheck': ['data/*.json', 'data/README.md']},
      entry_points={'console_scripts': ['topocheck=topocheck.cli:main']},
      zip_safe=False)
