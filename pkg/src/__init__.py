__description__="Source code module"

__all__=[]