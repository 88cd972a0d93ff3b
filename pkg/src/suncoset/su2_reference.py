"""Closed-form SU(2) reference data for the verification suite.

Every object produced by the constructive pipeline at n = 2 has a compact
closed form in the three chart angles (eta, gamma, xi).  They are collected
here as plain functions so the pipeline can be checked against fixed,
independently written expressions.  Frame rows follow the coordinate order
(eta, gamma, xi); columns follow the generator order (diagonal, real
off-diagonal, imaginary off-diagonal).

Valid on gamma in (0, pi/2); the frame inverses blow up at the interval
ends (csc/cot of 2 gamma), which is a chart artifact, not a group one.
"""

import numpy as np


def torus_factor(eta, gamma, xi):
    return np.array(
        [[np.exp(0.5j * eta), 0.0], [0.0, np.exp(-0.5j * eta)]]
    )


def coset_factor(eta, gamma, xi):
    c, s = np.cos(gamma), np.sin(gamma)
    return np.array(
        [[c, s * np.exp(1j * xi)], [-s * np.exp(-1j * xi), c]]
    )


def element(eta, gamma, xi):
    c, s = np.cos(gamma), np.sin(gamma)
    return np.array(
        [
            [c * np.exp(0.5j * eta), s * np.exp(1j * (xi - 0.5 * eta))],
            [-s * np.exp(-1j * (xi - 0.5 * eta)), c * np.exp(-0.5j * eta)],
        ]
    )


def left_tangent_eta(eta, gamma, xi):
    return np.array([[0.5j, 0.0], [0.0, -0.5j]])


def left_tangent_gamma(eta, gamma, xi):
    p = xi - eta
    return np.array(
        [[0.0, np.exp(1j * p)], [-np.exp(-1j * p), 0.0]]
    )


def left_tangent_xi(eta, gamma, xi):
    p = xi - eta
    c, s = np.cos(gamma), np.sin(gamma)
    return np.array(
        [
            [-1j * s * s, 1j * s * c * np.exp(1j * p)],
            [1j * s * c * np.exp(-1j * p), 1j * s * s],
        ]
    )


def left_frame(eta, gamma, xi):
    p = xi - eta
    return np.array(
        [
            [1j, 0.0, 0.0],
            [0.0, 2j * np.sin(p), 2j * np.cos(p)],
            [
                -1j * (1.0 - np.cos(2 * gamma)),
                1j * np.sin(2 * gamma) * np.cos(p),
                -1j * np.sin(2 * gamma) * np.sin(p),
            ],
        ]
    )


def left_frame_inverse(eta, gamma, xi):
    p = xi - eta
    tan_g = np.tan(gamma)
    csc_2g = 1.0 / np.sin(2 * gamma)
    return np.array(
        [
            [-1j, 0.0, 0.0],
            [-1j * np.cos(p) * tan_g, -0.5j * np.sin(p), -1j * np.cos(p) * csc_2g],
            [1j * np.sin(p) * tan_g, -0.5j * np.cos(p), 1j * np.sin(p) * csc_2g],
        ]
    )


def left_field_rows(eta, gamma, xi):
    return left_frame_inverse(eta, gamma, xi)


def left_oneform_rows(eta, gamma, xi):
    return left_frame(eta, gamma, xi).T


def right_tangent_eta(eta, gamma, xi):
    c2, s2 = np.cos(2 * gamma), np.sin(2 * gamma)
    return np.array(
        [
            [0.5j * c2, -0.5j * s2 * np.exp(1j * xi)],
            [-0.5j * s2 * np.exp(-1j * xi), -0.5j * c2],
        ]
    )


def right_tangent_gamma(eta, gamma, xi):
    return np.array(
        [[0.0, np.exp(1j * xi)], [-np.exp(-1j * xi), 0.0]]
    )


def right_tangent_xi(eta, gamma, xi):
    # The (1, 0) entry carries a plus sign: the matrix is anti-Hermitian and
    # must reproduce the xi row of right_frame below.
    c, s = np.cos(gamma), np.sin(gamma)
    return np.array(
        [
            [1j * s * s, 1j * s * c * np.exp(1j * xi)],
            [1j * s * c * np.exp(-1j * xi), -1j * s * s],
        ]
    )


def right_frame(eta, gamma, xi):
    c2, s2 = np.cos(2 * gamma), np.sin(2 * gamma)
    return np.array(
        [
            [1j * c2, -1j * s2 * np.cos(xi), 1j * s2 * np.sin(xi)],
            [0.0, 2j * np.sin(xi), 2j * np.cos(xi)],
            [1j * (1.0 - c2), 1j * s2 * np.cos(xi), -1j * s2 * np.sin(xi)],
        ]
    )


def right_frame_inverse(eta, gamma, xi):
    tan_g = np.tan(gamma)
    cot_2g = np.cos(2 * gamma) / np.sin(2 * gamma)
    return np.array(
        [
            [-1j, 0.0, -1j],
            [1j * np.cos(xi) * tan_g, -0.5j * np.sin(xi), -1j * np.cos(xi) * cot_2g],
            [-1j * np.sin(xi) * tan_g, -0.5j * np.cos(xi), 1j * np.sin(xi) * cot_2g],
        ]
    )


def right_field_rows(eta, gamma, xi):
    return right_frame_inverse(eta, gamma, xi)


def right_oneform_rows(eta, gamma, xi):
    return right_frame(eta, gamma, xi).T


def haar_density(eta, gamma, xi):
    return 2.0 * np.sin(2.0 * gamma)
