__description__="Test module"

__all__=[]