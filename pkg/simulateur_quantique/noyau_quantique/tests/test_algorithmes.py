"""
Tests du gradient, des systèmes linéaires, de Monte Carlo, du QUBO
et de l'interpolation
"""

import json
import math
import os

import numpy as np
from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from noyau_quantique import algorithmes
from noyau_quantique.circuits import Circuit
from noyau_quantique.erreurs import (
    ErreurConditionnement,
    ErreurDimension,
    ErreurNonHermitienne,
    ErreurNormalisation,
    ErreurParametres,
)
from noyau_quantique.essais import generateur
from noyau_quantique.etats import VecteurEtat, fidelite
from noyau_quantique.portes import PORTE_H, ApplicationPorte


DOSSIER_DONNEES = os.path.join(
    os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))), 'donnees'
)


def _lineaire(g):
    return lambda x: float(np.dot(g, x))


class GradientTests(SimpleTestCase):
    """Tests du gradient de Jordan et des différences finies"""

    def setUp(self):
        self.rng = generateur(42)

    def _probleme(self, g, n=4, m=4.0, l=1.0):
        N = 1 << n
        plage = float(np.sum(np.abs(g)) * l * (N - 1) / N)
        return algorithmes.ProblemeGradient(_lineaire(g), np.zeros(len(g)), n, m, l, m / N, plage)

    def test_jordan_exact(self):
        """Un gradient multiple de m/N est lu exactement en une requête"""
        for g in ([0.75], [0.75, -1.25], [0.75, -1.25, 0.5]):
            resultat = algorithmes.gradient_jordan(self._probleme(g), self.rng)
            np.testing.assert_allclose(resultat.gradient, g, atol=1e-9)
            self.assertEqual(resultat.requetes, 1)

    def test_taille_sortie(self):
        probleme = self._probleme([0.75, -1.25])
        self.assertEqual(probleme.N, 16)
        self.assertGreaterEqual(probleme.N0, 16)

    def test_plage_nulle(self):
        probleme = algorithmes.ProblemeGradient(lambda x: 0.0, [0.0], 3, 1.0, 1.0, 0.1, 0.0)
        self.assertEqual(probleme.n0, 1)

    def test_parametres_invalides(self):
        with self.assertRaises(ErreurParametres):
            algorithmes.ProblemeGradient(lambda x: 0.0, [0.0], 3, -1.0, 1.0, 0.1, 1.0)

    def test_differences_finies(self):
        fonction = lambda x: x[0] ** 2 + 3 * x[1]  # noqa: E731
        centre = algorithmes.gradient_differences_finies(fonction, [1.0, 2.0], 'centered', 0.5)
        np.testing.assert_allclose(centre.gradient, [2.0, 3.0], atol=1e-12)
        self.assertEqual(centre.requetes, 4)

        avant = algorithmes.gradient_differences_finies(fonction, [1.0, 2.0], 'forward', 0.5)
        np.testing.assert_allclose(avant.gradient, [2.5, 3.0], atol=1e-12)
        self.assertEqual(avant.requetes, 3)

    def test_schema_inconnu(self):
        with self.assertRaises(ErreurParametres):
            algorithmes.gradient_differences_finies(lambda x: 0.0, [0.0], 'backward', 0.5)


class SystemeLineaireTests(SimpleTestCase):
    """Tests de HHL et de la démonstration MCO"""

    def setUp(self):
        self.rng = generateur(42)

    def test_demo_mco(self):
        resultat = algorithmes.demo_mco(self.rng)
        self.assertGreaterEqual(resultat.fidelite, 1 - 1e-6)
        self.assertLess(resultat.proportionnalite, 1e-9)
        self.assertGreater(resultat.hhl.probabilite_acceptation, 0)
        self.assertLess(resultat.hhl.residu_horloge, 1e-9)

    def test_valeurs_propres_negatives(self):
        """L'horloge signée lit −2 sur 3 bits"""
        systeme = algorithmes.SystemeLineaire(np.diag([1.0, -2.0]), np.array([1, 1]) / math.sqrt(2))
        resultat = algorithmes.resoudre_hhl(systeme, 3, self.rng)
        attendu = VecteurEtat(np.array([2, -1]) / math.sqrt(5))
        self.assertAlmostEqual(fidelite(resultat.etat_solution, attendu), 1.0, delta=1e-9)
        self.assertEqual(resultat.constante, 1.0)

    def test_validation(self):
        with self.assertRaises(ErreurNonHermitienne):
            algorithmes.SystemeLineaire([[1, 2], [0, 1]], [1, 0])
        with self.assertRaises(ErreurDimension):
            algorithmes.SystemeLineaire(np.eye(3), [1, 0, 0])
        with self.assertRaises(ErreurNormalisation):
            algorithmes.SystemeLineaire(np.eye(2), [1, 1])

    def test_plongement_hermitien(self):
        systeme = algorithmes.SystemeLineaire.depuis_non_hermitienne([[2, 1], [0, 1]], [1, 0])
        self.assertEqual(systeme.A.shape, (4, 4))
        self.assertEqual(systeme.dimension_origine, 2)
        np.testing.assert_allclose(np.abs(systeme.solution_classique()), [1, 0], atol=1e-12)

    def test_identite(self):
        """A = I : la solution est |b⟩, acceptée avec probabilité C² = 1"""
        b = np.array([1, 1j, -1, 0]) / math.sqrt(3)
        resultat = algorithmes.resoudre_hhl(algorithmes.SystemeLineaire(np.eye(4), b), 3, self.rng)
        np.testing.assert_allclose(resultat.solution, b, atol=1e-9)
        self.assertAlmostEqual(resultat.probabilite_acceptation, 1.0, delta=1e-9)
        self.assertTrue(resultat.accepte)

    def test_hermitienne_aleatoire(self):
        """Spectre entier, base propre aléatoire : même direction que numpy.linalg.solve"""
        spectre = np.array([1.0, -2.0, 3.0, 5.0])
        for graine in range(5):
            rng = generateur(graine)
            q, _ = np.linalg.qr(rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4)))
            A = q @ np.diag(spectre) @ q.conj().T
            A = (A + A.conj().T) / 2
            b = rng.normal(size=4) + 1j * rng.normal(size=4)
            b /= np.linalg.norm(b)
            resultat = algorithmes.resoudre_hhl(algorithmes.SystemeLineaire(A, b), 4, rng)
            attendu = np.linalg.solve(A, b)
            attendu /= np.linalg.norm(attendu)
            self.assertAlmostEqual(abs(np.vdot(attendu, resultat.solution)) ** 2, 1.0, delta=1e-9)
            probabilite = float(np.sum(np.abs(q.conj().T @ b) ** 2 / spectre ** 2))
            self.assertAlmostEqual(resultat.probabilite_acceptation, probabilite, delta=1e-9)

    def test_constante_trop_grande(self):
        systeme = algorithmes.SystemeLineaire(np.diag([1.0, 2.0]), [1, 0])
        with self.assertRaises(ErreurParametres):
            algorithmes.resoudre_hhl(systeme, 3, self.rng, constante=1.5)


class MonteCarloTests(SimpleTestCase):
    """Tests de l'estimation de moyenne"""

    def setUp(self):
        self.rng = generateur(42)

    def test_bernoulli_sur_grille(self):
        resultat = algorithmes.moyenne_monte_carlo(Circuit(1), lambda x: 0.5, 8, 5, self.rng)
        self.assertAlmostEqual(resultat.mu, 0.5, places=12)
        self.assertEqual(resultat.requetes, 40)

    def test_phi_constante(self):
        """φ ≡ 0 donne μ = 0 et φ ≡ 1 donne μ = 1, sans erreur d'estimation"""
        uniforme = Circuit(2, [ApplicationPorte(PORTE_H, (q,)) for q in range(2)])
        for valeur in (0.0, 1.0):
            with self.subTest(phi=valeur):
                resultat = algorithmes.moyenne_monte_carlo(
                    uniforme, lambda x: valeur, 8, 3, self.rng
                )
                self.assertAlmostEqual(resultat.mu, valeur, places=12)

    def test_phi_hors_intervalle(self):
        with self.assertRaises(ErreurParametres):
            algorithmes.circuit_monte_carlo(Circuit(1), lambda x: 1.5)

    def test_etats_bons(self):
        uniforme = Circuit(2, [ApplicationPorte(PORTE_H, (q,)) for q in range(2)])
        circuit, bons = algorithmes.circuit_monte_carlo(uniforme, lambda x: x / 3)
        self.assertEqual(circuit.n_qubits, 3)
        self.assertEqual(bons, (1, 3, 5, 7))

    def test_frequence_borne(self):
        """La borne d'erreur est respectée avec probabilité au moins 8/π²"""
        uniforme = Circuit(3, [ApplicationPorte(PORTE_H, (q,)) for q in range(3)])
        frequence = algorithmes.frequence_borne_respectee(
            uniforme, lambda x: x / 7, 0.5, 16, 2000, self.rng
        )
        seuil = 8 / math.pi ** 2
        self.assertGreaterEqual(frequence, seuil - 3 * math.sqrt(seuil * (1 - seuil) / 2000))

    def test_pente_erreur(self):
        pente = algorithmes.pente_erreur_monte_carlo((8, 16, 32, 64), 128, 4, 7, 42)
        self.assertGreater(pente.pente, -1.25)
        self.assertLess(pente.pente, -0.75)


petites_matrices = st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.tuples(
        st.lists(st.integers(-5, 5), min_size=n * n, max_size=n * n),
        st.lists(st.integers(-5, 5), min_size=n, max_size=n),
    )
)


class QuboTests(SimpleTestCase):
    """Tests de l'énumération QUBO"""

    def test_petit_probleme(self):
        probleme = algorithmes.ProblemeQubo([[1, -2], [-2, 1]], [0, 0])
        solution = algorithmes.qubo_force_brute(probleme)
        self.assertEqual(solution.x, (1, 1))
        self.assertEqual(solution.h0, -2.0)

    def test_egalite_lexicographique(self):
        probleme = algorithmes.ProblemeQubo(np.zeros((3, 3)), np.zeros(3))
        self.assertEqual(algorithmes.qubo_force_brute(probleme).x, (0, 0, 0))
        self.assertEqual(algorithmes.qubo_enumeration_gray(probleme).x, (0, 0, 0))

    def test_une_variable(self):
        cas = [(1.0, -2.0, (1,), -1.0), (1.0, 0.0, (0,), 0.0), (-1.0, 1.0, (0,), 0.0)]
        for q, c, x, h0 in cas:
            with self.subTest(q=q, c=c):
                probleme = algorithmes.ProblemeQubo([[q]], [c])
                attendu = algorithmes.SolutionQubo(x, h0)
                self.assertEqual(algorithmes.qubo_force_brute(probleme), attendu)
                self.assertEqual(algorithmes.qubo_enumeration_gray(probleme).x, x)

    def test_q_nulle(self):
        """Q = 0 : chaque x_i vaut 1 exactement quand c_i < 0"""
        probleme = algorithmes.ProblemeQubo(np.zeros((4, 4)), [1.0, -1.0, 0.0, -2.0])
        solution = algorithmes.qubo_force_brute(probleme)
        self.assertEqual(solution, algorithmes.SolutionQubo((0, 1, 0, 1), -3.0))
        self.assertEqual(algorithmes.qubo_enumeration_gray(probleme), solution)

    def test_instance_fournie(self):
        chemin = os.path.join(DOSSIER_DONNEES, 'qubo_10_variables.json')
        with open(chemin, encoding='utf-8') as fichier:
            probleme = algorithmes.ProblemeQubo.depuis_dict(json.load(fichier))
        self.assertEqual(probleme.n, 10)
        force_brute = algorithmes.qubo_force_brute(probleme)
        gray = algorithmes.qubo_enumeration_gray(probleme)
        self.assertEqual(force_brute, gray)

    def test_non_symetrique(self):
        with self.assertRaises(ErreurParametres):
            algorithmes.ProblemeQubo([[0, 1], [0, 0]], [0, 0])

    @settings(deadline=None, max_examples=60)
    @given(petites_matrices)
    def test_gray_egal_force_brute(self, donnees):
        valeurs, c = donnees
        n = len(c)
        Q = np.array(valeurs, dtype=float).reshape(n, n)
        probleme = algorithmes.ProblemeQubo(Q + Q.T, c)
        self.assertEqual(
            algorithmes.qubo_force_brute(probleme), algorithmes.qubo_enumeration_gray(probleme)
        )


class VandermondeTests(SimpleTestCase):
    """Tests de l'interpolation polynomiale classique"""

    def test_interpolation_exacte(self):
        noeuds = [(x, 1 - 2 * x + 3 * x ** 2) for x in (0.0, 1.0, 2.0)]
        ajustement = algorithmes.ajustement_vandermonde(noeuds, 2)
        self.assertTrue(ajustement.exact)
        np.testing.assert_allclose(ajustement.coefficients, [1, -2, 3], atol=1e-10)

    def test_moindres_carres(self):
        noeuds = [(x, 2 * x + 1) for x in np.linspace(-1, 1, 7)]
        ajustement = algorithmes.ajustement_vandermonde(noeuds, 1)
        self.assertFalse(ajustement.exact)
        np.testing.assert_allclose(ajustement.coefficients, [1, 2], atol=1e-10)
        self.assertLess(np.max(np.abs(ajustement.residus)), 1e-10)

    def test_donnees_constantes(self):
        """Des valeurs constantes v donnent les coefficients (v, 0, …, 0)"""
        for degre, abscisses in ((3, (0.0, 1.0, 2.0, 3.0)), (2, np.linspace(-1, 1, 6))):
            with self.subTest(degre=degre):
                noeuds = [(x, 3.5) for x in abscisses]
                ajustement = algorithmes.ajustement_vandermonde(noeuds, degre)
                np.testing.assert_allclose(
                    ajustement.coefficients, [3.5] + [0.0] * degre, atol=1e-10
                )

    def test_noeuds_repetes(self):
        with self.assertRaises(ErreurConditionnement):
            algorithmes.ajustement_vandermonde([(1, 0), (1, 1)], 1)

    def test_mal_conditionne(self):
        noeuds = [(x, 0.0) for x in range(1, 21)]
        with self.assertRaises(ErreurConditionnement) as contexte:
            algorithmes.ajustement_vandermonde(noeuds, 19)
        self.assertGreater(contexte.exception.conditionnement, 1e12)
