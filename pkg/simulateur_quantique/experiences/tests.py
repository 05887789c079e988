"""
Tests des commandes d'expérience, des rapports et de leur enregistrement
"""

import csv
import io
import json
import os
import tempfile
from unittest import mock

from django.core.exceptions import ValidationError
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase

from .management.base import CODE_CONTROLES, CODE_PARAMETRES, formater_rapport
from .models import RapportExperience
from .serializers import RapportExperienceSerializer, aplatir_rapport
from .validators import GRAINE_MAX, ValidateurParametres


def _rapport(verifications=None):
    """Rapport minimal au format du gestionnaire"""
    return {
        'experience': 'demo-II',
        'parametres': {'figure': 'II'},
        'graine': 7,
        'resultats': {'lecture': '10', 'details': {'portes': 3}},
        'verifications': verifications if verifications is not None else [
            {'nom': 'lecture_finale', 'attendu': '10', 'observe': '10', 'succes': True},
        ],
    }


def _executer(*args, **options):
    sortie, erreurs = io.StringIO(), io.StringIO()
    call_command(*args, stdout=sortie, stderr=erreurs, **options)
    return sortie.getvalue(), erreurs.getvalue()


class RapportExperienceModelTest(TestCase):
    """
    Tests pour le modèle RapportExperience
    """

    def test_champs_derives(self):
        """Le signal pre_save calcule le statut et le nombre de contrôles"""
        verifications = [
            {'nom': 'a', 'attendu': 1, 'observe': 1, 'succes': True},
            {'nom': 'b', 'attendu': 1, 'observe': 2, 'succes': False},
        ]
        rapport = RapportExperience.objects.create(**{
            'experience': 'demo-I',
            'parametres': {},
            'graine': 0,
            'resultats': {},
            'verifications': verifications,
        })
        self.assertFalse(rapport.succes)
        self.assertEqual(rapport.nombre_verifications, 2)
        self.assertEqual(rapport.controles_en_echec(), ['b'])

    def test_grande_graine(self):
        rapport = RapportExperience.depuis_rapport(dict(_rapport(), graine=2 ** 62))
        rapport.save()
        rapport.refresh_from_db()
        self.assertEqual(int(rapport.graine), 2 ** 62)
        self.assertTrue(rapport.succes)

    def test_str(self):
        rapport = RapportExperience.depuis_rapport(_rapport())
        self.assertEqual(str(rapport), "demo-II (graine 7) : succès")


class SerializerTest(SimpleTestCase):
    """
    Tests du format public des rapports
    """

    def test_format_public(self):
        donnees = RapportExperienceSerializer(RapportExperience.depuis_rapport(_rapport())).data
        self.assertEqual(set(donnees), {'experiment', 'params', 'seed', 'results', 'checks'})
        self.assertEqual(donnees['seed'], 7)
        self.assertEqual(
            dict(donnees['checks'][0]),
            {'name': 'lecture_finale', 'expected': '10', 'observed': '10', 'pass': True},
        )

    def test_aplatir(self):
        donnees = RapportExperienceSerializer(RapportExperience.depuis_rapport(_rapport())).data
        lignes = aplatir_rapport(donnees)
        self.assertEqual(lignes, sorted(lignes, key=lambda ligne: (ligne[0], ligne[1])))
        self.assertIn(('results', 'details.portes', 3), lignes)
        self.assertIn(('checks', 'lecture_finale.pass', True), lignes)

    def test_formater_csv(self):
        donnees = RapportExperienceSerializer(RapportExperience.depuis_rapport(_rapport())).data
        lignes = list(csv.reader(io.StringIO(formater_rapport(donnees, 'csv'))))
        self.assertEqual(lignes[0], ['section', 'cle', 'valeur'])
        self.assertIn(['experiment', '', 'demo-II'], lignes)


class ValidateurParametresTest(SimpleTestCase):
    """
    Tests pour les validateurs
    """

    def test_graine(self):
        self.assertEqual(ValidateurParametres.valider_graine(GRAINE_MAX), GRAINE_MAX)
        for graine in (-1, GRAINE_MAX + 1, None):
            with self.assertRaises(ValidationError):
                ValidateurParametres.valider_graine(graine)

    def test_t_puissance_de_deux(self):
        self.assertEqual(ValidateurParametres.valider_t(32), 32)
        for t in (1, 12, 128):
            with self.assertRaises(ValidationError):
                ValidateurParametres.valider_t(t)

    def test_qubits_algorithme(self):
        self.assertEqual(ValidateurParametres.valider_qubits_algorithme('grover', 5), 5)
        with self.assertRaises(ValidationError):
            ValidateurParametres.valider_qubits_algorithme('qubo', 5)
        with self.assertRaises(ValidationError):
            ValidateurParametres.valider_qubits_algorithme('lightning', 2)

    def test_flux(self):
        ValidateurParametres.valider_flux('lcg', 500, 1, 'minimal')
        with self.assertRaises(ValidationError):
            ValidateurParametres.valider_flux('lcg', 100, 1, 'minimal')
        with self.assertRaises(ValidationError):
            ValidateurParametres.valider_flux('lcg', 1000, 0, 'minimal')
        ValidateurParametres.valider_flux('lcg', 1000, 0, 'mauvais')


class CommandeDemoTest(TestCase):
    """
    Tests de la commande demo
    """

    def test_rapport_json(self):
        sortie, _ = _executer('demo', 'II', seed=7)
        donnees = json.loads(sortie)
        self.assertEqual(donnees['experiment'], 'demo-II')
        self.assertEqual(donnees['seed'], 7)
        self.assertTrue(all(c['pass'] for c in donnees['checks']))

    def test_determinisme(self):
        premiere, _ = _executer('demo', 'I', '--seed=3', '--trials=500')
        seconde, _ = _executer('demo', 'I', '--seed=3', '--trials=500')
        self.assertEqual(premiere, seconde)

    def test_sortie_csv(self):
        sortie, _ = _executer('demo', 'III', '--out=csv')
        self.assertTrue(sortie.startswith('section,cle,valeur\n'))

    def test_enregistrement(self):
        _executer('demo', 'IV', '--enregistrer')
        rapport = RapportExperience.objects.get()
        self.assertEqual(rapport.experience, 'demo-IV')
        self.assertTrue(rapport.succes)

    def test_sans_enregistrement(self):
        _executer('demo', 'II')
        self.assertFalse(RapportExperience.objects.exists())

    def test_graine_invalide(self):
        with self.assertRaises(CommandError) as contexte:
            _executer('demo', 'II', '--seed=-1')
        self.assertEqual(contexte.exception.returncode, CODE_PARAMETRES)

    def test_audit(self):
        with self.assertLogs('audit', level='INFO') as journal:
            _executer('demo', 'II', seed=7)
        self.assertEqual(journal.records[0].experience, 'demo-II')
        self.assertEqual(journal.records[0].action, 'run')

    def test_controles_en_echec(self):
        """Un contrôle en échec donne le code de sortie 1 après l'écriture du rapport"""
        gestionnaire = mock.Mock()
        gestionnaire.executer_demo.return_value = _rapport([
            {'nom': 'lecture_finale', 'attendu': '10', 'observe': '01', 'succes': False},
        ])
        sortie, erreurs = io.StringIO(), io.StringIO()
        with mock.patch(
            'experiences.management.base.obtenir_gestionnaire_experiences', return_value=gestionnaire
        ):
            with self.assertRaises(CommandError) as contexte:
                call_command('demo', 'II', stdout=sortie, stderr=erreurs)
        self.assertEqual(contexte.exception.returncode, CODE_CONTROLES)
        self.assertFalse(json.loads(sortie.getvalue())['checks'][0]['pass'])
        self.assertIn('lecture_finale', erreurs.getvalue())


class CommandeMonnaieTest(SimpleTestCase):
    """
    Tests de la commande monnaie
    """

    def test_sans_attaque(self):
        sortie, _ = _executer('monnaie', 'none', '--qubits=3', '--trials=200', '--seed=5')
        donnees = json.loads(sortie)
        self.assertEqual(donnees['experiment'], 'money-none')
        self.assertEqual(donnees['results']['taux_validation'], 1.0)

    def test_devine_avec_politique(self):
        with self.assertRaises(CommandError) as contexte:
            _executer('monnaie', 'guess', '--policy=reissue')
        self.assertEqual(contexte.exception.returncode, CODE_PARAMETRES)

    def test_qubits_invalides(self):
        with self.assertRaises(CommandError) as contexte:
            _executer('monnaie', 'none', '--qubits=0')
        self.assertEqual(contexte.exception.returncode, CODE_PARAMETRES)


class CommandeAlgorithmeTest(SimpleTestCase):
    """
    Tests de la commande algorithme
    """

    def test_qubo(self):
        donnees = json.loads(_executer('algorithme', 'qubo', '--seed=1')[0])
        self.assertEqual(donnees['experiment'], 'qubo')
        self.assertEqual(len(donnees['results']['x']), 10)

    def test_gradient_chaque_taille_admise(self):
        """Chaque valeur de --qubits acceptée donne un gradient exact"""
        for qubits in range(1, 5):
            with self.subTest(qubits=qubits):
                sortie, _ = _executer('algorithme', 'gradient', f'--qubits={qubits}', '--seed=3')
                donnees = json.loads(sortie)
                self.assertTrue(all(c['pass'] for c in donnees['checks']))
                self.assertEqual(donnees['params']['qubits'], qubits)
        with self.assertRaises(CommandError) as contexte:
            _executer('algorithme', 'gradient', '--qubits=5')
        self.assertEqual(contexte.exception.returncode, CODE_PARAMETRES)

    def test_t_invalide(self):
        with self.assertRaises(CommandError) as contexte:
            _executer('algorithme', 'montecarlo', '--t=12')
        self.assertEqual(contexte.exception.returncode, CODE_PARAMETRES)

    def test_qubits_refuses(self):
        with self.assertRaises(CommandError) as contexte:
            _executer('algorithme', 'ols', '--qubits=3')
        self.assertEqual(contexte.exception.returncode, CODE_PARAMETRES)


class CommandeAleatoireTest(SimpleTestCase):
    """
    Tests de la commande aleatoire
    """

    def test_flux_lcg(self):
        with tempfile.TemporaryDirectory() as dossier:
            chemin = os.path.join(dossier, 'flux.txt')
            sortie, _ = _executer('aleatoire', '--seed=1', '--count=1000', f'--flux={chemin}')
            with open(chemin, encoding='utf-8') as fichier:
                lignes = fichier.read().splitlines()
        self.assertEqual(lignes[0], '16807')
        self.assertEqual(lignes[1], '282475249')
        self.assertEqual(len(lignes), 1000)
        self.assertEqual(json.loads(sortie)['experiment'], 'rng-lcg')

    def test_flux_trop_court(self):
        with self.assertRaises(CommandError) as contexte:
            _executer('aleatoire', '--count=100')
        self.assertEqual(contexte.exception.returncode, CODE_PARAMETRES)

    def test_graine_degeneree(self):
        with self.assertRaises(CommandError) as contexte:
            _executer('aleatoire', '--seed=0', '--count=1000')
        self.assertEqual(contexte.exception.returncode, CODE_PARAMETRES)

    def test_periode_mauvais_lcg(self):
        sortie, _ = _executer('aleatoire', '--preset=mauvais', '--count=1000')
        self.assertEqual(json.loads(sortie)['results']['periode'], 256)
