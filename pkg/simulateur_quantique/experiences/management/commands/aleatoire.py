"""
Flux de nombres aléatoires (LCG ou générateur quantique simulé)
et rapport d'uniformité
"""

from experiences.management.base import CommandeExperience
from experiences.validators import ValidateurParametres
from noyau_quantique.aleatoire import PRESETS_LCG
from noyau_quantique.gestionnaire_experiences import SOURCES


class Command(CommandeExperience):
    help = "Produit un flux aléatoire, l'écrit dans --flux et rapporte son uniformité"

    def ajouter_arguments(self, parser):
        parser.add_argument('--source', choices=SOURCES, default='lcg')
        parser.add_argument('--preset', choices=sorted(PRESETS_LCG), default='minimal')
        parser.add_argument('--count', type=int, default=10000, help="Nombre de valeurs (ou de bits)")
        parser.add_argument('--format', choices=['decimal', 'hex'], default='decimal')
        parser.add_argument('--flux', default=None, help="Fichier recevant le flux brut")

    def executer(self, gestionnaire, options):
        ValidateurParametres.valider_flux(
            options['source'], options['count'], options['seed'], options['preset']
        )
        rapport, lignes = gestionnaire.executer_aleatoire(
            options['source'],
            options['count'],
            options['seed'],
            preset=options['preset'],
            format_flux=options['format'],
        )
        if options['flux']:
            with open(options['flux'], 'w', encoding='utf-8') as fichier:
                fichier.write('\n'.join(lignes) + '\n')
        return rapport
