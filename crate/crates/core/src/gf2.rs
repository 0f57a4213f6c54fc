//! Row-reduced spans over GF(2), used for independence and membership tests
//! on symplectic Pauli vectors.
//!
//! A Pauli string on `n ≤ 64` qubits maps to the 2n-bit vector `x | z << n`;
//! phases are ignored, which is exactly what stabilizer-group questions need
//! (membership up to sign, independence, rank).

use crate::pauli::PauliString;

/// A subspace of GF(2)^{2n} kept in row echelon form.
#[derive(Debug, Clone, Default)]
pub struct Gf2Space {
    rows: Vec<u128>,
}

impl Gf2Space {
    pub fn new() -> Gf2Space {
        Gf2Space::default()
    }

    /// Symplectic bit vector of a string, phase dropped.
    pub fn vector_of(s: &PauliString) -> u128 {
        (s.x_mask() as u128) | ((s.z_mask() as u128) << s.num_qubits())
    }

    fn reduce(&self, mut v: u128) -> u128 {
        for &row in &self.rows {
            let lead = 127 - row.leading_zeros();
            if v >> lead & 1 == 1 {
                v ^= row;
            }
        }
        v
    }

    /// Number of independent vectors inserted so far.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Inserts `v` if it enlarges the span; returns whether it did.
    pub fn insert(&mut self, v: u128) -> bool {
        let reduced = self.reduce(v);
        if reduced == 0 {
            return false;
        }
        self.rows.push(reduced);
        // Keep rows sorted by leading bit so reduce stays a single pass.
        self.rows.sort_unstable_by_key(|r| std::cmp::Reverse(*r));
        true
    }

    /// Inserts a string's symplectic vector; returns whether it was new.
    pub fn insert_string(&mut self, s: &PauliString) -> bool {
        self.insert(Self::vector_of(s))
    }

    /// Whether `v` lies in the current span (the zero vector always does).
    pub fn contains(&self, v: u128) -> bool {
        self.reduce(v) == 0
    }

    pub fn contains_string(&self, s: &PauliString) -> bool {
        self.contains(Self::vector_of(s))
    }
}
