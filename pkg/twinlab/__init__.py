from pkg_resources import DistributionNotFound, get_distribution

from packaging.version import Version

if Version(get_distribution('networkx').version) < Version('2.5'):
    raise ImportError('Minimum required version for networkx is 2.5')

try:
    __version__ = get_distribution('twinlab').version
except DistributionNotFound:
    __version__ = '0.0.0.dev0'
