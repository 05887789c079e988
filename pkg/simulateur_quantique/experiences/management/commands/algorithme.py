"""
Algorithmes : MCO par HHL, Grover, gradient, Monte Carlo, QUBO,
monnaie éclair et estimation de phase
"""

from experiences.management.base import CommandeExperience
from experiences.validators import ValidateurParametres
from noyau_quantique.gestionnaire_experiences import ALGORITHMES


class Command(CommandeExperience):
    help = "Exécute un algorithme et vérifie ses résultats de référence"

    def ajouter_arguments(self, parser):
        parser.add_argument('nom', choices=ALGORITHMES, help="Algorithme à exécuter")
        parser.add_argument('--qubits', type=int, default=None)
        parser.add_argument('--iterations', type=int, default=None, help="Itérations de Grover")
        parser.add_argument('--t', type=int, default=None, help="Taille de l'horloge d'amplitude")
        parser.add_argument('--repetitions', type=int, default=None, help="Répétitions (médiane)")

    def executer(self, gestionnaire, options):
        nom = options['nom']
        ValidateurParametres.valider_qubits_algorithme(nom, options['qubits'])
        ValidateurParametres.valider_iterations(options['iterations'])
        ValidateurParametres.valider_t(options['t'])
        ValidateurParametres.valider_essais(options['repetitions'])

        extras = {'qubits': options['qubits']}
        if nom == 'grover':
            extras['iterations'] = options['iterations']
        if nom == 'montecarlo':
            extras.update(t=options['t'], repetitions=options['repetitions'])
        return gestionnaire.executer_algorithme(nom, options['seed'], options['trials'], **extras)
