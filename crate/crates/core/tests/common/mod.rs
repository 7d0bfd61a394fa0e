//! Reference tables shared by the integration tests.
#![allow(dead_code)]

/// Rows `A_{n,1}, ..., A_{n,n}` for `n = 1..=7`.
pub const REFINED_ROWS: [&[i64]; 7] = [
    &[1],
    &[1, 1],
    &[2, 3, 2],
    &[7, 14, 14, 7],
    &[42, 105, 135, 105, 42],
    &[429, 1287, 2002, 2002, 1287, 429],
    &[7436, 26026, 47320, 56784, 47320, 26026, 7436],
];

pub const EXTENDED_3: [[i64; 3]; 3] = [[0, 1, 1], [1, 1, 1], [-2, -1, 0]];

pub const EXTENDED_4: [[i64; 4]; 4] = [[0, 2, 3, 2], [-2, 2, 4, 3], [2, 1, 2, 2], [-7, -5, -2, 0]];

pub const EXTENDED_5: [[i64; 5]; 5] = [
    [0, 7, 14, 14, 7],
    [-7, 7, 23, 26, 14],
    [-21, -2, 16, 23, 14],
    [7, -7, -2, 7, 7],
    [-42, -35, -21, -7, 0],
];

pub const EXTENDED_6: [[i64; 6]; 6] = [
    [0, 42, 105, 135, 105, 42],
    [-42, 42, 203, 300, 250, 105],
    [-147, -56, 161, 322, 300, 135],
    [-282, -179, -8, 161, 203, 105],
    [42, -177, -179, -56, 42, 42],
    [-429, -387, -282, -147, -42, 0],
];

pub const EXTENDED_7: [[i64; 7]; 7] = [
    [0, 429, 1287, 2002, 2002, 1287, 429],
    [-429, 429, 2847, 5174, 5551, 3731, 1287],
    [-1716, -1131, 2418, 6422, 7748, 5551, 2002],
    [-3718, -3874, -546, 4004, 6422, 5174, 2002],
    [-5720, -5707, -4043, -546, 2418, 2847, 1287],
    [429, -4433, -5707, -3874, -1131, 429, 429],
    [-7436, -7007, -5720, -3718, -1716, -429, 0],
];

/// The extended matrix of order `n` for `3 <= n <= 7`, as nested vectors.
pub fn extended(n: usize) -> Vec<Vec<i64>> {
    fn rows<const N: usize>(m: &[[i64; N]; N]) -> Vec<Vec<i64>> {
        m.iter().map(|r| r.to_vec()).collect()
    }
    match n {
        3 => rows(&EXTENDED_3),
        4 => rows(&EXTENDED_4),
        5 => rows(&EXTENDED_5),
        6 => rows(&EXTENDED_6),
        7 => rows(&EXTENDED_7),
        _ => panic!("no reference matrix for n = {n}"),
    }
}
