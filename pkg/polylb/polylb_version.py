polylb_version = "0.4.1"
