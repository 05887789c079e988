"""
Noyau numérique du simulateur : vecteurs d'état, portes, circuits,
sous-routines, algorithmes, monnaie quantique et nombres aléatoires
"""
