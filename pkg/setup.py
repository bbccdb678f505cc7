#
# Copyright (C) 2026 The Undistill Authors
#
# This file is part of Undistill.
#
# Undistill is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# Undistill is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with Undistill.  If not, see <http://www.gnu.org/licenses/>.

import sys
from setuptools import setup
from setuptools import find_packages


ARGS = {
    'name': 'undistill',
    'version': '0.1.0',
    'install_requires': [
        'numpy>=1.17',
        'scipy>=1.4',
    ],
    'platforms': [
        'Linux',
        'Darwin',
    ],
    'license': 'GPLv3',
    'classifiers': [
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
        'Natural Language :: English',
        'Operating System :: POSIX :: Linux',
        'Operating System :: MacOS :: MacOS X',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Physics',
        'Topic :: Software Development :: Libraries :: Python Modules',
    ],
    'description': "Distillability bounds, local filtering and full "\
        "undistillability checks for low-rank bipartite quantum states.",
    'long_description': "Numerical tools for density matrices whose rank is "\
        "below the rank of one marginal: a local filter and the "\
        "distillable entanglement lower bound it yields, a search for "\
        "product vectors of low conditional rank, the rank regime where "\
        "PPT decides separability, full undistillability of tripartite "\
        "pure states, Choi channels with their complements, and a seeded "\
        "Haar-ensemble experiment.",
    'zip_safe': False,
    'packages': find_packages('lib'),
    'package_dir': {'': 'lib'},
    'entry_points': {
        'console_scripts': [
            'undistill = undistill.cli.main:main',
        ],
    },
    'test_suite': 'undistill',
}


if __name__ == '__main__':

    if sys.version_info < (3, 6):
        message = "{package} is not able to install:  The version of python "\
                  "that is being used, '{version}', is not compatable with "\
                  "{package}.  {package} will only install with Python "\
                  "version {package_version} or greater"
        message = message.format(package=ARGS['name'], version=sys.version,
                                 package_version='3.6')
        sys.stderr.write(message)
        sys.exit(1)

    setup(**ARGS)
