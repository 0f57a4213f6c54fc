//! Deterministic fixtures for the workspace benchmarks. No randomness: the
//! same inputs are timed on every run.

use stabgap::{PauliString, PauliSum};

/// A fully dense 2-local Hamiltonian: every single-qubit term and every
/// nearest-pair term over all three letters, with coefficients that cycle
/// through a fixed pattern so no term cancels.
pub fn dense_two_local(n: usize) -> PauliSum {
    let letters = ["X", "Y", "Z"];
    let mut sum = PauliSum::new(n).expect("positive qubit count");
    let mut k = 0usize;
    let mut coeff = || {
        k += 1;
        0.25 + (k % 7) as f64 * 0.125
    };
    for q in 0..n {
        for letter in letters {
            sum.add_term(coeff(), site(n, q, letter)).unwrap();
        }
    }
    for q in 0..n.saturating_sub(1) {
        for a in letters {
            for b in letters {
                let mut text = vec!["I"; n];
                text[q] = a;
                text[q + 1] = b;
                sum.add_term(coeff(), text.concat().parse().unwrap())
                    .unwrap();
            }
        }
    }
    sum
}

/// Alternating-letter string, the densest case for the product kernel.
pub fn striped_string(n: usize) -> PauliString {
    (0..n)
        .map(|q| ["X", "Y", "Z"][q % 3])
        .collect::<String>()
        .parse()
        .unwrap()
}

fn site(n: usize, q: usize, letter: &str) -> PauliString {
    let mut text = vec!["I"; n];
    text[q] = letter;
    text.concat().parse().unwrap()
}
