__description__="configuration module: logger, environment settings and analysis config files"
__all__=[]