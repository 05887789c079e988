"""
Démonstrations des circuits élémentaires (figures I à IV)
"""

from experiences.management.base import CommandeExperience
from noyau_quantique.gestionnaire_experiences import FIGURES


class Command(CommandeExperience):
    help = "Construit, sérialise, exécute et vérifie le circuit d'une figure"

    def ajouter_arguments(self, parser):
        parser.add_argument('figure', choices=FIGURES, help="Figure à démontrer")

    def executer(self, gestionnaire, options):
        return gestionnaire.executer_demo(options['figure'], options['seed'], options['trials'])
