__description__="core module with terms, syntax, states, the rewriting engine, peaks, orders, analyses and jobs"

__all__=[]