# populates fields for >>>help(nsr) and setup.py
__title__ = "nsr-engine"
__description__ = "Exact truncated-series engine for the non-stationary Ruijsenaars function"
__version__ = "0.1.0"
__author__ = "Eduardo Davalos"
__author_email__ = "eduardo.davalos.anaya@vanderbilt.edu"
__license__ = "GNU"
__copyright__ = "Copyright 2023 Eduardo Davalos"
