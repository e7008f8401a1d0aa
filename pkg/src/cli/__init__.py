__description__="chrdc command line: peaks, check and run"
__all__=[]
