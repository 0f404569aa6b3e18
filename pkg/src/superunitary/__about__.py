from importlib import metadata

try:
    __version__ = metadata.version("superunitary")
except metadata.PackageNotFoundError:
    __version__ = "0+unknown"
