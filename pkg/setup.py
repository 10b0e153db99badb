import setuptools
import os

# Do not import coxsph directly.
# Instead, read the _version.py file and exec its contents.
path = os.path.join(os.path.dirname(__file__), 'coxsph', '_version.py')
with open(path, 'r') as f:
    lines = f.read()
    exec(lines)
coxsphVersion = __version__

classifiers = [
    'Environment :: Console',
    'Intended Audience :: Developers',
    'Intended Audience :: Science/Research',
    'Operating System :: OS Independent',
    'Programming Language :: Python',
    'Programming Language :: Python :: 3 :: Only',
    'Topic :: Scientific/Engineering :: Mathematics'
]

setuptools.setup(
    name="coxsph",
    version=coxsphVersion,
    python_requires='>=3.7',
    author="coxsph contributors",
    license="MIT License",
    description="Sphericality of elements of finite Coxeter groups",
    long_description=(
        "`coxsph` decides I-sphericality of elements of finite Coxeter groups "
        "by searching for witness reduced words, runs censuses of whole "
        "groups, and expands key polynomials in the D-Schur basis with two "
        "independent methods, so that type A results can be cross-checked "
        "against multiplicity-freeness of key polynomials."
    ),
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=['tests']),
    classifiers=classifiers,
    install_requires=[
        "Arpeggio>=1.9.2",
        "Jinja2>=2.11.1",
        "PyYAML>=5.3.1",
        "numpy>=1.17",
        "sympy>=1.5",
        "progress>=1.5"
    ],
    entry_points={
        'console_scripts': ['coxsph=coxsph.harness.cli:main']
    },

    # Which data files to include, see
    # https://setuptools.readthedocs.io/en/latest/setuptools.html#including-data-files
    package_data = {
        "coxsph": [
            "*.yml",
            "*/*.peg",
            "report/*.txt",
            "report/*.html",
            "examples/*.yml",
        ]
    }
)
