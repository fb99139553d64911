# For development mode
import setuptools

setuptools.setup()
