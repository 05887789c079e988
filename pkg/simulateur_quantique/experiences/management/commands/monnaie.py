"""
Schéma de Wiesner, attaques et jeu de sécurité
"""

from experiences.management.base import CommandeExperience
from experiences.validators import ValidateurParametres
from noyau_quantique.gestionnaire_experiences import ATTAQUES
from noyau_quantique.monnaie import PolitiqueBanque


class Command(CommandeExperience):
    help = "Simule l'émission, la vérification et la contrefaçon de billets quantiques"

    def ajouter_arguments(self, parser):
        parser.add_argument('attaque', choices=ATTAQUES, help="Scénario à simuler")
        parser.add_argument('--qubits', type=int, default=5, help="Qubits par billet")
        parser.add_argument(
            '--policy', choices=[p.value for p in PolitiqueBanque], default=None,
            help="Politique de retour de la banque",
        )

    def executer(self, gestionnaire, options):
        ValidateurParametres.valider_qubits(options['qubits'])
        ValidateurParametres.valider_politique(options['policy'])
        ValidateurParametres.valider_attaque_politique(options['attaque'], options['policy'])
        return gestionnaire.executer_monnaie(
            options['attaque'],
            options['qubits'],
            options['seed'],
            essais=options['trials'],
            politique=options['policy'],
        )
