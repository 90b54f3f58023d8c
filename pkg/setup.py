#!/usr/bin/env python3

""" Foveated visual clutter models in Python

.. moduleauthor:: fovclutter team


"""

from setuptools import setup, find_packages

# Current version 0.1.0
version_tag = '0.1.0'


setup(name='fovclutter',
      version=version_tag,
      author='fovclutter team',
      install_requires=['pytest',
                        'scipy',
                        'numpy>=1.20',
                        'pandas',
                        'bokeh>=2.0.0',
                        'h5py',
                        'PyYAML',
                        'scikit-image>=0.19',
                        'Pillow',
                        ],
      packages=find_packages(exclude=['tests', 'tests.*']),
      package_data={'fovclutter.io': ['defaults.yml']},
      entry_points={'console_scripts': ['fovclutter = fovclutter.cli:main']},
      python_requires='>=3.8, <4',
      description='fovclutter computes foveated visual clutter scores: '
                  'Feature Congestion maps pooled through log-polar '
                  'peripheral architectures',
      keywords=['fovclutter', 'clutter', 'foveation', 'peripheral vision'],

      license='Apache2',

      # See https://PyPI.python.org/PyPI?%3Aaction=list_classifiers
      classifiers=[
            # How mature is this project? Common values are
            #   3 - Alpha
            #   4 - Beta
            #   5 - Production/Stable
            'Development Status :: 3 - Alpha',

            # Indicate who your project is intended for
            'Intended Audience :: Science/Research',
            'Topic :: Scientific/Engineering :: Image Processing',
            'Environment :: Console',

            # Pick your license as you wish (should match "license" above)
            'License :: OSI Approved :: Apache Software License',

            'Programming Language :: Python :: 3.8',
            'Programming Language :: Python :: 3.9',
            'Programming Language :: Python :: 3.10',

      ],
     )
