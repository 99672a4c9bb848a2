//! Frozen reference systems: the 72-row H-representation of the 10-lineup
//! polytope of the hypersimplex H(3,6), and the cumulative generalized
//! exclusion families for fermions (rendered at d=14) and bosons (rendered
//! at d=8), r <= 8. Each family row is (first_r, lhs, a, b, c) with
//! right-hand side a*N + b + sum c_j w_j.

#![allow(clippy::type_complexity)]

/// (first_r, lhs coefficients, top-10 sums) for the H(3,6) system.
pub const H36_SYSTEM: &[(u32, [i64; 6], [i64; 10])] = &[
    (1, [1, 0, 0, 0, 0, 0], [1, 1, 1, 1, 1, 1, 1, 1, 1, 1]),
    (1, [1, 1, 1, 1, 1, 0], [3, 3, 3, 3, 3, 3, 3, 3, 3, 3]),
    (2, [1, 1, 1, 0, 0, 0], [3, 2, 2, 2, 2, 2, 2, 2, 2, 2]),
    (3, [2, 2, 1, 1, 0, 0], [5, 5, 4, 4, 4, 4, 3, 3, 3, 3]),
    (4, [2, 1, 1, 1, 0, 0], [4, 4, 4, 3, 3, 3, 3, 3, 3, 3]),
    (4, [2, 2, 1, 1, 1, 0], [5, 5, 5, 4, 4, 4, 4, 4, 4, 4]),
    (5, [1, 1, 0, 0, 0, 0], [2, 2, 2, 2, 1, 1, 1, 1, 1, 1]),
    (5, [1, 1, 1, 1, 0, 0], [3, 3, 3, 3, 2, 2, 2, 2, 2, 2]),
    (5, [4, 3, 2, 2, 1, 0], [9, 9, 8, 8, 7, 7, 7, 7, 6, 6]),
    (6, [3, 2, 1, 1, 0, 0], [6, 6, 5, 5, 5, 4, 4, 4, 4, 4]),
    (6, [3, 2, 2, 1, 1, 0], [7, 6, 6, 6, 6, 5, 5, 5, 5, 5]),
    (6, [3, 3, 2, 2, 1, 0], [8, 8, 7, 7, 7, 6, 6, 6, 6, 6]),
    (7, [2, 1, 1, 1, 1, 0], [4, 4, 4, 4, 4, 4, 3, 3, 3, 3]),
    (7, [4, 3, 2, 1, 1, 0], [9, 8, 8, 7, 7, 7, 6, 6, 6, 6]),
    (7, [4, 3, 3, 2, 1, 0], [10, 9, 9, 8, 8, 8, 7, 7, 7, 7]),
    (7, [6, 4, 3, 2, 1, 0], [13, 12, 11, 11, 10, 10, 9, 9, 9, 8]),
    (
        7,
        [6, 5, 4, 3, 2, 0],
        [15, 14, 13, 13, 12, 12, 11, 11, 11, 10],
    ),
    (8, [2, 1, 1, 0, 0, 0], [4, 3, 3, 3, 3, 3, 3, 2, 2, 2]),
    (8, [2, 2, 2, 1, 1, 0], [6, 5, 5, 5, 5, 5, 5, 4, 4, 4]),
    (8, [3, 2, 1, 1, 1, 0], [6, 6, 6, 5, 5, 5, 5, 4, 4, 4]),
    (8, [3, 2, 2, 2, 1, 0], [7, 7, 7, 6, 6, 6, 6, 5, 5, 5]),
    (8, [5, 3, 2, 2, 1, 0], [10, 10, 9, 9, 8, 8, 8, 7, 7, 7]),
    (8, [5, 4, 3, 2, 1, 0], [12, 11, 10, 10, 9, 9, 9, 8, 8, 8]),
    (8, [5, 4, 3, 3, 2, 0], [12, 12, 11, 11, 10, 10, 10, 9, 9, 9]),
    (8, [6, 5, 3, 2, 1, 0], [14, 13, 12, 11, 11, 10, 10, 9, 9, 9]),
    (
        8,
        [6, 5, 4, 3, 1, 0],
        [15, 14, 13, 12, 12, 11, 11, 10, 10, 10],
    ),
    (9, [3, 2, 2, 1, 0, 0], [7, 6, 6, 5, 5, 5, 5, 5, 4, 4]),
    (9, [3, 3, 2, 1, 1, 0], [8, 7, 7, 6, 6, 6, 6, 6, 5, 5]),
    (9, [4, 2, 2, 1, 1, 0], [8, 7, 7, 7, 7, 6, 6, 6, 5, 5]),
    (9, [4, 3, 2, 1, 0, 0], [9, 8, 7, 7, 7, 6, 6, 6, 5, 5]),
    (9, [4, 3, 3, 2, 2, 0], [10, 9, 9, 9, 9, 8, 8, 8, 7, 7]),
    (9, [4, 4, 3, 2, 1, 0], [11, 10, 9, 9, 9, 8, 8, 8, 7, 7]),
    (9, [5, 3, 2, 1, 1, 0], [10, 9, 9, 8, 8, 8, 7, 7, 6, 6]),
    (9, [5, 4, 2, 2, 1, 0], [11, 11, 10, 9, 9, 8, 8, 8, 7, 7]),
    (9, [5, 4, 3, 3, 1, 0], [12, 12, 11, 10, 10, 9, 9, 9, 8, 8]),
    (
        9,
        [5, 4, 4, 3, 2, 0],
        [13, 12, 12, 11, 11, 11, 10, 10, 9, 9],
    ),
    (
        9,
        [7, 4, 3, 2, 1, 0],
        [14, 13, 12, 12, 11, 11, 10, 10, 9, 9],
    ),
    (
        9,
        [7, 5, 4, 2, 1, 0],
        [16, 14, 13, 13, 12, 12, 11, 11, 10, 10],
    ),
    (
        9,
        [7, 6, 5, 3, 2, 0],
        [18, 16, 15, 15, 14, 14, 13, 13, 12, 12],
    ),
    (
        9,
        [7, 6, 5, 4, 3, 0],
        [18, 17, 16, 16, 15, 15, 14, 14, 13, 13],
    ),
    (10, [3, 1, 1, 1, 0, 0], [5, 5, 5, 4, 4, 4, 4, 4, 4, 3]),
    (10, [3, 3, 2, 2, 2, 0], [8, 8, 8, 7, 7, 7, 7, 7, 7, 6]),
    (10, [4, 2, 1, 1, 0, 0], [7, 7, 6, 6, 6, 5, 5, 5, 5, 4]),
    (10, [4, 3, 3, 1, 1, 0], [10, 8, 8, 8, 8, 7, 7, 7, 7, 6]),
    (10, [4, 4, 3, 3, 2, 0], [11, 11, 10, 10, 10, 9, 9, 9, 9, 8]),
    (10, [5, 3, 3, 2, 1, 0], [11, 10, 10, 9, 9, 8, 8, 8, 8, 7]),
    (10, [5, 4, 3, 1, 1, 0], [12, 10, 10, 9, 9, 9, 8, 8, 8, 7]),
    (10, [5, 4, 3, 2, 2, 0], [12, 11, 11, 10, 10, 9, 9, 9, 9, 8]),
    (10, [5, 4, 4, 2, 1, 0], [13, 11, 11, 10, 10, 10, 9, 9, 9, 8]),
    (10, [6, 3, 2, 2, 1, 0], [11, 11, 10, 10, 9, 9, 9, 8, 8, 7]),
    (
        10,
        [6, 4, 4, 3, 1, 0],
        [14, 13, 13, 11, 11, 11, 10, 10, 10, 9],
    ),
    (
        10,
        [6, 5, 3, 2, 2, 0],
        [14, 13, 13, 11, 11, 11, 10, 10, 10, 9],
    ),
    (
        10,
        [6, 5, 4, 2, 1, 0],
        [15, 13, 12, 12, 11, 11, 11, 10, 10, 9],
    ),
    (
        10,
        [6, 5, 4, 4, 3, 0],
        [15, 15, 14, 14, 13, 13, 13, 12, 12, 11],
    ),
    (
        10,
        [7, 5, 3, 2, 1, 0],
        [15, 14, 13, 12, 12, 11, 10, 10, 10, 9],
    ),
    (
        10,
        [7, 5, 4, 3, 1, 0],
        [16, 15, 14, 13, 12, 12, 12, 11, 11, 10],
    ),
    (
        10,
        [7, 6, 4, 2, 1, 0],
        [17, 15, 14, 13, 13, 12, 12, 11, 11, 10],
    ),
    (
        10,
        [7, 6, 4, 3, 2, 0],
        [17, 16, 15, 14, 13, 13, 13, 12, 12, 11],
    ),
    (
        10,
        [7, 6, 5, 3, 1, 0],
        [18, 16, 15, 14, 14, 13, 13, 12, 12, 11],
    ),
    (
        10,
        [7, 6, 5, 4, 2, 0],
        [18, 17, 16, 15, 15, 14, 13, 13, 13, 12],
    ),
    (
        10,
        [8, 4, 3, 2, 1, 0],
        [15, 14, 13, 13, 12, 12, 11, 11, 10, 9],
    ),
    (
        10,
        [8, 5, 4, 3, 2, 0],
        [17, 16, 15, 15, 14, 13, 13, 12, 12, 11],
    ),
    (
        10,
        [8, 6, 4, 3, 1, 0],
        [18, 17, 15, 15, 14, 13, 13, 12, 12, 11],
    ),
    (
        10,
        [8, 6, 5, 2, 1, 0],
        [19, 16, 15, 15, 14, 14, 13, 13, 12, 11],
    ),
    (
        10,
        [8, 6, 5, 4, 1, 0],
        [19, 18, 17, 15, 15, 14, 14, 13, 13, 12],
    ),
    (
        10,
        [8, 6, 5, 4, 3, 0],
        [19, 18, 17, 17, 16, 15, 15, 14, 14, 13],
    ),
    (
        10,
        [8, 7, 4, 3, 2, 0],
        [19, 18, 17, 15, 15, 14, 14, 13, 13, 12],
    ),
    (
        10,
        [8, 7, 5, 4, 2, 0],
        [20, 19, 17, 17, 16, 15, 15, 14, 14, 13],
    ),
    (
        10,
        [8, 7, 6, 3, 2, 0],
        [21, 18, 17, 17, 16, 16, 15, 15, 14, 13],
    ),
    (
        10,
        [8, 7, 6, 5, 4, 0],
        [21, 20, 19, 19, 18, 18, 17, 17, 16, 15],
    ),
    (
        10,
        [9, 7, 4, 3, 1, 0],
        [20, 19, 17, 16, 16, 14, 14, 13, 13, 12],
    ),
    (
        10,
        [9, 8, 6, 5, 2, 0],
        [23, 22, 20, 19, 19, 17, 17, 16, 16, 15],
    ),
];

pub const FERMION_FAMILIES: &[(u32, [i64; 14], i64, i64, &[i64])] = &[
    (1, [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0], 0, 1, &[]),
    (1, [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0], 1, 0, &[]),
    (2, [1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0], 1, -1, &[1]),
    (
        3,
        [2, 2, 2, 2, 2, 2, 1, 1, 0, 0, 0, 0, 0, 0],
        2,
        -2,
        &[1, 1],
    ),
    (
        4,
        [2, 2, 2, 2, 2, 1, 1, 1, 0, 0, 0, 0, 0, 0],
        2,
        -3,
        &[1, 1, 1],
    ),
    (
        4,
        [2, 2, 2, 2, 2, 2, 1, 1, 1, 0, 0, 0, 0, 0],
        2,
        -2,
        &[1, 1, 1],
    ),
    (
        5,
        [2, 2, 2, 2, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0],
        2,
        -4,
        &[1, 1, 1, 1],
    ),
    (
        5,
        [2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 0, 0, 0, 0],
        2,
        -2,
        &[1, 1, 1, 1],
    ),
    (
        5,
        [4, 4, 4, 4, 4, 3, 2, 2, 1, 0, 0, 0, 0, 0],
        4,
        -5,
        &[2, 2, 1, 1],
    ),
    (
        6,
        [2, 2, 2, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0],
        2,
        -5,
        &[1, 1, 1, 1, 1],
    ),
    (
        6,
        [2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 0, 0, 0],
        2,
        -2,
        &[1, 1, 1, 1, 1],
    ),
    (
        6,
        [3, 3, 3, 3, 3, 2, 2, 1, 1, 0, 0, 0, 0, 0],
        3,
        -4,
        &[2, 1, 1, 1, 1],
    ),
    (
        6,
        [4, 4, 4, 4, 3, 3, 2, 2, 1, 0, 0, 0, 0, 0],
        4,
        -6,
        &[2, 2, 1, 1, 1],
    ),
    (
        6,
        [4, 4, 4, 4, 4, 3, 2, 2, 1, 1, 0, 0, 0, 0],
        4,
        -5,
        &[2, 2, 1, 1, 1],
    ),
    (
        7,
        [2, 2, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0],
        2,
        -6,
        &[1, 1, 1, 1, 1, 1],
    ),
    (
        7,
        [2, 2, 2, 2, 2, 1, 1, 1, 1, 0, 0, 0, 0, 0],
        2,
        -3,
        &[1, 1, 1, 1, 1, 1],
    ),
    (
        7,
        [2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 0, 0],
        2,
        -2,
        &[1, 1, 1, 1, 1, 1],
    ),
    (
        7,
        [4, 4, 4, 3, 3, 3, 2, 2, 1, 0, 0, 0, 0, 0],
        4,
        -7,
        &[2, 2, 1, 1, 1, 1],
    ),
    (
        7,
        [4, 4, 4, 4, 3, 3, 2, 2, 1, 1, 0, 0, 0, 0],
        4,
        -6,
        &[2, 2, 1, 1, 1, 1],
    ),
    (
        7,
        [4, 4, 4, 4, 4, 3, 2, 2, 1, 1, 1, 0, 0, 0],
        4,
        -5,
        &[2, 2, 1, 1, 1, 1],
    ),
    (
        7,
        [5, 5, 5, 5, 4, 3, 3, 2, 1, 0, 0, 0, 0, 0],
        5,
        -8,
        &[3, 2, 2, 1, 1, 1],
    ),
    (
        7,
        [5, 5, 5, 5, 5, 4, 3, 2, 2, 1, 0, 0, 0, 0],
        5,
        -6,
        &[3, 2, 2, 1, 1, 1],
    ),
    (
        7,
        [7, 7, 7, 7, 6, 5, 4, 3, 2, 0, 0, 0, 0, 0],
        7,
        -10,
        &[4, 3, 2, 2, 1, 1],
    ),
    (
        7,
        [7, 7, 7, 7, 7, 5, 4, 3, 2, 1, 0, 0, 0, 0],
        7,
        -9,
        &[4, 3, 2, 2, 1, 1],
    ),
    (
        8,
        [2, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0],
        2,
        -7,
        &[1, 1, 1, 1, 1, 1, 1],
    ),
    (
        8,
        [2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 0],
        2,
        -2,
        &[1, 1, 1, 1, 1, 1, 1],
    ),
    (
        8,
        [3, 3, 3, 3, 2, 2, 2, 1, 1, 0, 0, 0, 0, 0],
        3,
        -5,
        &[2, 1, 1, 1, 1, 1, 1],
    ),
    (
        8,
        [3, 3, 3, 3, 3, 2, 2, 1, 1, 1, 0, 0, 0, 0],
        3,
        -4,
        &[2, 1, 1, 1, 1, 1, 1],
    ),
    (
        8,
        [4, 4, 3, 3, 3, 3, 2, 2, 1, 0, 0, 0, 0, 0],
        4,
        -8,
        &[2, 2, 1, 1, 1, 1, 1],
    ),
    (
        8,
        [4, 4, 4, 3, 3, 3, 2, 2, 1, 1, 0, 0, 0, 0],
        4,
        -7,
        &[2, 2, 1, 1, 1, 1, 1],
    ),
    (
        8,
        [4, 4, 4, 4, 3, 2, 2, 2, 1, 0, 0, 0, 0, 0],
        4,
        -7,
        &[2, 2, 2, 1, 1, 1, 1],
    ),
    (
        8,
        [4, 4, 4, 4, 3, 3, 2, 2, 1, 1, 1, 0, 0, 0],
        4,
        -6,
        &[2, 2, 1, 1, 1, 1, 1],
    ),
    (
        8,
        [4, 4, 4, 4, 4, 3, 2, 2, 1, 1, 1, 1, 0, 0],
        4,
        -5,
        &[2, 2, 1, 1, 1, 1, 1],
    ),
    (
        8,
        [4, 4, 4, 4, 4, 3, 2, 2, 2, 1, 0, 0, 0, 0],
        4,
        -5,
        &[2, 2, 2, 1, 1, 1, 1],
    ),
    (
        8,
        [5, 5, 5, 4, 4, 3, 3, 2, 1, 0, 0, 0, 0, 0],
        5,
        -9,
        &[3, 2, 2, 1, 1, 1, 1],
    ),
    (
        8,
        [5, 5, 5, 5, 5, 4, 3, 2, 2, 1, 1, 0, 0, 0],
        5,
        -6,
        &[3, 2, 2, 1, 1, 1, 1],
    ),
    (
        8,
        [6, 6, 6, 6, 5, 4, 3, 3, 2, 0, 0, 0, 0, 0],
        6,
        -9,
        &[3, 3, 2, 2, 1, 1, 1],
    ),
    (
        8,
        [6, 6, 6, 6, 6, 4, 3, 3, 2, 1, 0, 0, 0, 0],
        6,
        -8,
        &[3, 3, 2, 2, 1, 1, 1],
    ),
    (
        8,
        [7, 7, 7, 6, 6, 5, 4, 3, 2, 0, 0, 0, 0, 0],
        7,
        -11,
        &[4, 3, 2, 2, 1, 1, 1],
    ),
    (
        8,
        [7, 7, 7, 7, 6, 5, 4, 3, 2, 1, 0, 0, 0, 0],
        7,
        -10,
        &[4, 3, 2, 2, 1, 1, 1],
    ),
    (
        8,
        [7, 7, 7, 7, 7, 5, 4, 3, 2, 1, 1, 0, 0, 0],
        7,
        -9,
        &[4, 3, 2, 2, 1, 1, 1],
    ),
    (
        8,
        [9, 9, 9, 9, 7, 6, 5, 4, 2, 1, 0, 0, 0, 0],
        9,
        -14,
        &[5, 4, 3, 2, 2, 1, 1],
    ),
    (
        8,
        [9, 9, 9, 9, 8, 7, 5, 4, 3, 2, 0, 0, 0, 0],
        9,
        -12,
        &[5, 4, 3, 2, 2, 1, 1],
    ),
];

pub const BOSON_FAMILIES: &[(u32, [i64; 8], i64, i64, &[i64])] = &[
    (1, [1, 1, 1, 1, 1, 1, 1, 0], 1, 0, &[]),
    (2, [1, 0, 0, 0, 0, 0, 0, 0], 1, -1, &[1]),
    (3, [2, 1, 0, 0, 0, 0, 0, 0], 2, -2, &[2, 1]),
    (4, [2, 1, 1, 0, 0, 0, 0, 0], 2, -2, &[2, 1, 1]),
    (4, [3, 2, 0, 0, 0, 0, 0, 0], 3, -3, &[3, 2, 1]),
    (5, [2, 1, 1, 1, 0, 0, 0, 0], 2, -2, &[2, 1, 1, 1]),
    (5, [3, 2, 1, 0, 0, 0, 0, 0], 3, -3, &[3, 2, 1, 1]),
    (5, [4, 3, 0, 0, 0, 0, 0, 0], 4, -4, &[4, 3, 2, 1]),
    (6, [2, 1, 1, 1, 1, 0, 0, 0], 2, -2, &[2, 1, 1, 1, 1]),
    (6, [3, 2, 1, 1, 0, 0, 0, 0], 3, -3, &[3, 2, 1, 1, 1]),
    (6, [4, 3, 1, 0, 0, 0, 0, 0], 4, -4, &[4, 3, 2, 1, 1]),
    (6, [5, 4, 0, 0, 0, 0, 0, 0], 5, -5, &[5, 4, 3, 2, 1]),
    (6, [6, 4, 3, 0, 0, 0, 0, 0], 6, -6, &[6, 4, 3, 2, 1]),
    (7, [2, 1, 1, 1, 1, 1, 0, 0], 2, -2, &[2, 1, 1, 1, 1, 1]),
    (7, [3, 2, 1, 1, 1, 0, 0, 0], 3, -3, &[3, 2, 1, 1, 1, 1]),
    (7, [3, 2, 2, 0, 0, 0, 0, 0], 3, -3, &[3, 2, 2, 1, 1, 1]),
    (7, [4, 3, 1, 1, 0, 0, 0, 0], 4, -4, &[4, 3, 2, 1, 1, 1]),
    (7, [4, 3, 2, 0, 0, 0, 0, 0], 4, -4, &[4, 3, 2, 2, 1, 1]),
    (7, [5, 4, 1, 0, 0, 0, 0, 0], 5, -5, &[5, 4, 3, 2, 1, 1]),
    (7, [6, 4, 3, 1, 0, 0, 0, 0], 6, -6, &[6, 4, 3, 2, 1, 1]),
    (7, [6, 4, 3, 2, 0, 0, 0, 0], 6, -6, &[6, 4, 3, 2, 2, 1]),
    (7, [6, 5, 0, 0, 0, 0, 0, 0], 6, -6, &[6, 5, 4, 3, 2, 1]),
    (8, [2, 1, 1, 1, 1, 1, 1, 0], 2, -2, &[2, 1, 1, 1, 1, 1, 1]),
    (8, [3, 2, 1, 1, 1, 1, 0, 0], 3, -3, &[3, 2, 1, 1, 1, 1, 1]),
    (8, [3, 2, 2, 1, 0, 0, 0, 0], 3, -3, &[3, 2, 2, 1, 1, 1, 1]),
    (8, [4, 3, 1, 1, 1, 0, 0, 0], 4, -4, &[4, 3, 2, 1, 1, 1, 1]),
    (8, [4, 3, 2, 1, 0, 0, 0, 0], 4, -4, &[4, 3, 2, 2, 1, 1, 1]),
    (8, [5, 4, 1, 1, 0, 0, 0, 0], 5, -5, &[5, 4, 3, 2, 1, 1, 1]),
    (8, [5, 4, 2, 0, 0, 0, 0, 0], 5, -5, &[5, 4, 3, 2, 2, 1, 1]),
    (8, [6, 4, 3, 1, 1, 0, 0, 0], 6, -6, &[6, 4, 3, 2, 1, 1, 1]),
    (8, [6, 4, 3, 2, 1, 0, 0, 0], 6, -6, &[6, 4, 3, 2, 2, 1, 1]),
    (8, [6, 4, 3, 2, 2, 0, 0, 0], 6, -6, &[6, 4, 3, 2, 2, 2, 1]),
    (8, [6, 4, 3, 3, 0, 0, 0, 0], 6, -6, &[6, 4, 3, 3, 2, 1, 1]),
    (8, [6, 5, 1, 0, 0, 0, 0, 0], 6, -6, &[6, 5, 4, 3, 2, 1, 1]),
    (8, [7, 5, 4, 0, 0, 0, 0, 0], 7, -7, &[7, 5, 4, 3, 2, 1, 1]),
    (8, [7, 6, 0, 0, 0, 0, 0, 0], 7, -7, &[7, 6, 5, 4, 3, 2, 1]),
];
