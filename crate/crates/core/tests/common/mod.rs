//! Matrix oracles built from first principles: explicit 2x2 literals and
//! Kronecker products only, sharing no construction code with the library.

// Each integration test target compiles its own copy and uses a subset.
#![allow(dead_code)]

use ndarray::Array2;
use num_complex::Complex64;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn pauli_2x2(letter: char) -> Array2<Complex64> {
    let o = c(0.0, 0.0);
    let l = c(1.0, 0.0);
    match letter {
        'I' => Array2::from_shape_vec((2, 2), vec![l, o, o, l]),
        'X' => Array2::from_shape_vec((2, 2), vec![o, l, l, o]),
        'Y' => Array2::from_shape_vec((2, 2), vec![o, c(0.0, -1.0), c(0.0, 1.0), o]),
        'Z' => Array2::from_shape_vec((2, 2), vec![l, o, o, c(-1.0, 0.0)]),
        other => panic!("not a Pauli letter: {other}"),
    }
    .unwrap()
}

pub fn kron(a: &Array2<Complex64>, b: &Array2<Complex64>) -> Array2<Complex64> {
    let (ar, ac) = a.dim();
    let (br, bc) = b.dim();
    let mut out = Array2::zeros((ar * br, ac * bc));
    for i in 0..ar {
        for j in 0..ac {
            for k in 0..br {
                for l in 0..bc {
                    out[(i * br + k, j * bc + l)] = a[(i, j)] * b[(k, l)];
                }
            }
        }
    }
    out
}

/// Tensor product of single-qubit Paulis, leftmost letter on qubit 0,
/// scaled by `sign`.
pub fn operator(letters: &str, sign: f64) -> Array2<Complex64> {
    let mut out = Array2::from_elem((1, 1), c(sign, 0.0));
    for ch in letters.chars() {
        out = kron(&out, &pauli_2x2(ch));
    }
    out
}

/// One Pauli on qubit `q` of an `n`-qubit register, identity elsewhere.
pub fn site_operator(n: usize, q: usize, letter: char) -> Array2<Complex64> {
    let mut letters: Vec<char> = vec!['I'; n];
    letters[q] = letter;
    operator(&letters.iter().collect::<String>(), 1.0)
}

pub fn max_abs(m: &Array2<Complex64>) -> f64 {
    m.iter().map(|v| v.norm()).fold(0.0, f64::max)
}

pub fn dagger(m: &Array2<Complex64>) -> Array2<Complex64> {
    m.mapv(|v| v.conj()).t().to_owned()
}
