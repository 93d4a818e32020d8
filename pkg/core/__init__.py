"""
Core algorithms: algebra, matchings, greedy construction, oracle and sweeps.
"""
