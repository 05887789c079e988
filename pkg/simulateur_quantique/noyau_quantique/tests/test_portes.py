"""
Tests des portes : unitarité, constructions et décompositions
"""

import numpy as np
from django.test import SimpleTestCase
from hypothesis import given, strategies as st

from noyau_quantique.circuits import Circuit, matrice_circuit
from noyau_quantique.erreurs import ErreurDimension, ErreurNonUnitaire, ErreurParametres
from noyau_quantique.etats import KET_0, KET_1, KET_MOINS, KET_PLUS, VecteurEtat, appliquer_porte
from noyau_quantique.portes import (
    MATRICE_H,
    MATRICE_I,
    MATRICE_S,
    MATRICE_T,
    MATRICE_X,
    MATRICE_Y,
    MATRICE_Z,
    PORTE_CNOT,
    PORTE_H,
    PORTE_I,
    PORTE_S,
    PORTE_SDG,
    PORTE_SWAP,
    PORTE_T,
    PORTE_TDG,
    PORTE_TOFFOLI,
    PORTE_X,
    PORTE_Y,
    PORTE_Z,
    ApplicationPorte,
    adjointe,
    controlee,
    decomposition_swap,
    decomposition_toffoli,
    est_unitaire,
    matrice_de,
    matrice_rk,
    porte_controlee,
    porte_personnalisee,
    porte_rk,
    verifier_unitaire,
)


class MatricesTests(SimpleTestCase):
    """Tests des matrices du jeu de portes"""

    def test_portes_unitaires(self):
        for porte in (PORTE_X, PORTE_H, PORTE_SDG, PORTE_CNOT, PORTE_SWAP, PORTE_TOFFOLI):
            self.assertTrue(est_unitaire(matrice_de(porte)), porte)

    def test_cnot(self):
        attendu = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
        np.testing.assert_array_equal(matrice_de(PORTE_CNOT), attendu)
        np.testing.assert_array_equal(controlee(MATRICE_X), attendu)

    def test_adjointe(self):
        np.testing.assert_allclose(matrice_de(PORTE_SDG), adjointe(MATRICE_S))
        self.assertEqual(PORTE_H.adjointe(), PORTE_H)

    def test_rk(self):
        """R_2 = S et R_3 = T"""
        np.testing.assert_allclose(matrice_de(porte_rk(2)), MATRICE_S, atol=1e-15)
        np.testing.assert_allclose(matrice_de(porte_rk(3)), MATRICE_T, atol=1e-15)

    def test_non_unitaire(self):
        with self.assertRaises(ErreurNonUnitaire):
            verifier_unitaire([[1, 1], [0, 1]])
        with self.assertRaises(ErreurNonUnitaire):
            porte_personnalisee(np.diag([1.0, 2.0]))

    def test_dimension_invalide(self):
        with self.assertRaises(ErreurDimension):
            verifier_unitaire(np.eye(3))

    @given(st.integers(min_value=1, max_value=12))
    def test_rk_fois_adjointe(self, k):
        porte = porte_rk(k)
        produit = matrice_de(porte) @ matrice_de(porte.adjointe())
        np.testing.assert_allclose(produit, np.eye(2), atol=1e-12)


class ControleTests(SimpleTestCase):
    """Tests des portes contrôlées et des applications"""

    def test_profondeur_maximale(self):
        double = porte_controlee(porte_controlee(PORTE_X))
        self.assertEqual(double.nombre_qubits, 3)
        np.testing.assert_array_equal(matrice_de(double), matrice_de(PORTE_TOFFOLI))
        with self.assertRaises(ErreurParametres):
            porte_controlee(double)

    def test_arite(self):
        with self.assertRaises(ErreurParametres):
            ApplicationPorte(PORTE_CNOT, (0,))

    def test_indices_repetes(self):
        with self.assertRaises(ErreurParametres):
            ApplicationPorte(PORTE_CNOT, (1, 1))


class DecompositionTests(SimpleTestCase):
    """Tests des décompositions en portes à deux qubits"""

    def test_toffoli(self):
        circuit = Circuit(3, decomposition_toffoli())
        ecart = np.max(np.abs(matrice_circuit(circuit) - matrice_de(PORTE_TOFFOLI)))
        self.assertLess(ecart, 1e-12)
        self.assertEqual(len(circuit.etapes), 16)
        self.assertTrue(all(e.porte.nombre_qubits <= 2 for e in circuit.etapes))

    def test_swap(self):
        circuit = Circuit(2, decomposition_swap())
        np.testing.assert_allclose(matrice_circuit(circuit), matrice_de(PORTE_SWAP), atol=1e-15)

    def test_hadamard_involutif(self):
        np.testing.assert_allclose(MATRICE_H @ MATRICE_H, np.eye(2), atol=1e-15)


IDENTITES = [
    ('Y² = I', MATRICE_Y @ MATRICE_Y, MATRICE_I),
    ('Z² = I', MATRICE_Z @ MATRICE_Z, MATRICE_I),
    ('T² = S', MATRICE_T @ MATRICE_T, MATRICE_S),
    ('S² = Z', MATRICE_S @ MATRICE_S, MATRICE_Z),
    ('HZH = X', MATRICE_H @ MATRICE_Z @ MATRICE_H, MATRICE_X),
    ('HXH = Z', MATRICE_H @ MATRICE_X @ MATRICE_H, MATRICE_Z),
    ('R1 = Z', matrice_rk(1), MATRICE_Z),
    ('R2 = S', matrice_rk(2), MATRICE_S),
]

ACTIONS = [
    ('Y|0⟩ = i|1⟩', MATRICE_Y, KET_0, VecteurEtat(1j * KET_1.amplitudes)),
    ('Z|+⟩ = |−⟩', MATRICE_Z, KET_PLUS, KET_MOINS),
    ('X|0⟩ = |1⟩', MATRICE_X, KET_0, KET_1),
    ('H|0⟩ = |+⟩', MATRICE_H, KET_0, KET_PLUS),
]


class IdentitesTests(SimpleTestCase):
    """Tests des identités algébriques du jeu de portes"""

    def test_identites(self):
        for nom, gauche, droite in IDENTITES:
            with self.subTest(nom):
                np.testing.assert_allclose(gauche, droite, atol=1e-12)

    def test_actions_sur_les_etats(self):
        for nom, matrice, entree, attendu in ACTIONS:
            with self.subTest(nom):
                obtenu = appliquer_porte(entree, matrice, (0,))
                np.testing.assert_allclose(obtenu.amplitudes, attendu.amplitudes, atol=1e-12)

    def test_toutes_les_portes_nommees_unitaires(self):
        portes = [
            PORTE_I, PORTE_X, PORTE_Y, PORTE_Z, PORTE_H, PORTE_S, PORTE_T, PORTE_SDG, PORTE_TDG,
            PORTE_CNOT, PORTE_SWAP, PORTE_TOFFOLI,
        ]
        for k in range(1, 9):
            portes += [porte_rk(k), porte_rk(k, dague=True)]
        for porte in portes:
            with self.subTest(porte=porte):
                self.assertTrue(est_unitaire(matrice_de(porte)))
