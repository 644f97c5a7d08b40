from polylb.polylb_version import polylb_version as __version__
