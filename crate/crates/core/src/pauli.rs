//! Pauli strings in symplectic form, and real-weighted sums of them.
//!
//! A string stores one X bit and one Z bit per qubit plus a global power of i.
//! Qubit `q` carries I, X, Z, or Y according to `(x_q, z_q)` being (0,0),
//! (1,0), (0,1), or (1,1); the per-qubit letters are the Hermitian Pauli
//! matrices, so a string with phase exponent 0 is Hermitian as it stands.
//! Products, commutation, and weights are all computed on the bit masks
//! without touching matrices.
//!
//! Qubit 0 is the leftmost tensor factor and the most significant bit of a
//! computational basis index: on 3 qubits the string `XIZ` acts with X on the
//! qubit indexing the 4s place of the basis index.

use crate::error::Error;
use crate::Result;
use ndarray::Array2;
use num_complex::Complex64;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Hard cap on qubit count; masks are stored in 64-bit words.
pub const MAX_QUBITS: usize = 64;

const PHASES: [Complex64; 4] = [
    Complex64::new(1.0, 0.0),
    Complex64::new(0.0, 1.0),
    Complex64::new(-1.0, 0.0),
    Complex64::new(0.0, -1.0),
];

/// Single-qubit Pauli letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    /// All non-identity letters, in the order used by exhaustive scans.
    pub const NONTRIVIAL: [Pauli; 3] = [Pauli::X, Pauli::Y, Pauli::Z];

    /// Letter for an (x, z) bit pair.
    pub fn from_bits(x: bool, z: bool) -> Pauli {
        match (x, z) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (false, true) => Pauli::Z,
            (true, true) => Pauli::Y,
        }
    }

    pub fn bits(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (true, false),
            Pauli::Z => (false, true),
            Pauli::Y => (true, true),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    pub fn from_char(c: char) -> Result<Pauli> {
        match c {
            'I' => Ok(Pauli::I),
            'X' => Ok(Pauli::X),
            'Y' => Ok(Pauli::Y),
            'Z' => Ok(Pauli::Z),
            other => Err(Error::Parse(format!(
                "invalid Pauli letter {other:?}; expected one of I, X, Y, Z"
            ))),
        }
    }
}

/// A Pauli string `i^phase · P_0 ⊗ P_1 ⊗ … ⊗ P_{n-1}` on `n` qubits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PauliString {
    n: usize,
    x: u64,
    z: u64,
    /// Power of i in front of the tensor product, reduced mod 4.
    phase: u8,
}

impl PauliString {
    fn check_qubits(n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "a Pauli string needs at least one qubit".into(),
            ));
        }
        if n > MAX_QUBITS {
            return Err(Error::ResourceLimit(format!(
                "{n} qubits exceeds the {MAX_QUBITS}-qubit mask width"
            )));
        }
        Ok(())
    }

    /// The identity on `n` qubits.
    pub fn identity(n: usize) -> Result<PauliString> {
        Self::check_qubits(n)?;
        Ok(PauliString {
            n,
            x: 0,
            z: 0,
            phase: 0,
        })
    }

    /// A single non-trivial letter at `qubit`, identity elsewhere.
    pub fn single(n: usize, qubit: usize, p: Pauli) -> Result<PauliString> {
        Self::check_qubits(n)?;
        if qubit >= n {
            return Err(Error::InvalidParameter(format!(
                "qubit {qubit} out of range for {n} qubits"
            )));
        }
        let (x, z) = p.bits();
        Ok(PauliString {
            n,
            x: (x as u64) << qubit,
            z: (z as u64) << qubit,
            phase: 0,
        })
    }

    /// Build from raw masks with phase exponent 0. Bit `q` of each mask
    /// belongs to qubit `q`.
    pub fn from_masks(n: usize, x: u64, z: u64) -> Result<PauliString> {
        Self::check_qubits(n)?;
        if n < MAX_QUBITS && (x >> n != 0 || z >> n != 0) {
            return Err(Error::InvalidParameter(format!(
                "mask bits set beyond qubit {n}"
            )));
        }
        Ok(PauliString { n, x, z, phase: 0 })
    }

    /// Same string with the phase exponent replaced.
    pub fn with_phase(mut self, phase: u8) -> PauliString {
        self.phase = phase % 4;
        self
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn x_mask(&self) -> u64 {
        self.x
    }

    pub fn z_mask(&self) -> u64 {
        self.z
    }

    /// Power of i in front of the tensor product, in {0, 1, 2, 3}.
    pub fn phase_exp(&self) -> u8 {
        self.phase
    }

    /// Letter on one qubit.
    pub fn letter(&self, qubit: usize) -> Pauli {
        Pauli::from_bits(self.x >> qubit & 1 == 1, self.z >> qubit & 1 == 1)
    }

    /// Number of qubits carrying a non-identity letter.
    pub fn weight(&self) -> u32 {
        (self.x | self.z).count_ones()
    }

    pub fn is_identity_string(&self) -> bool {
        self.x == 0 && self.z == 0
    }

    /// Whether the two strings commute, by the symplectic inner product:
    /// they anticommute iff the overlap count `|x_a∧z_b| + |z_a∧x_b|` is odd.
    pub fn commutes_with(&self, other: &PauliString) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "cannot compare strings on {} and {} qubits",
                self.n, other.n
            )));
        }
        let overlap = (self.x & other.z).count_ones() + (self.z & other.x).count_ones();
        Ok(overlap.is_multiple_of(2))
    }

    /// Group product. Per qubit, writing a letter with bits (x, z) as
    /// `i^{xz} X^x Z^z` and commuting the Z factors through the X factors
    /// gives the phase increment `x₁z₁ + x₂z₂ − x₃z₃ + 2·z₁x₂ (mod 4)`
    /// where (x₃, z₃) are the XORed bits of the result.
    pub fn multiply(&self, other: &PauliString) -> Result<PauliString> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply strings on {} and {} qubits",
                self.n, other.n
            )));
        }
        let x3 = self.x ^ other.x;
        let z3 = self.z ^ other.z;
        let t1 = (self.x & self.z).count_ones() as i64;
        let t2 = (other.x & other.z).count_ones() as i64;
        let t3 = (x3 & z3).count_ones() as i64;
        let cross = (self.z & other.x).count_ones() as i64;
        let phase =
            (self.phase as i64 + other.phase as i64 + t1 + t2 - t3 + 2 * cross).rem_euclid(4) as u8;
        Ok(PauliString {
            n: self.n,
            x: x3,
            z: z3,
            phase,
        })
    }

    /// The sign of a phase-normalized Hermitian string: +1 for phase 0,
    /// −1 for phase 2, `None` for the anti-Hermitian phases.
    pub fn hermitian_sign(&self) -> Option<f64> {
        match self.phase {
            0 => Some(1.0),
            2 => Some(-1.0),
            _ => None,
        }
    }

    /// The same letters with phase exponent 0, plus the scalar `i^phase`
    /// that was stripped.
    pub fn phase_normalized(&self) -> (PauliString, Complex64) {
        (
            PauliString { phase: 0, ..*self },
            PHASES[self.phase as usize],
        )
    }

    /// Dense matrix in the computational basis (qubit 0 = most significant
    /// bit). Each column holds exactly one nonzero entry.
    pub fn to_matrix(&self) -> Array2<Complex64> {
        let dim = 1usize << self.n;
        let mut m = Array2::zeros((dim, dim));
        // Masks reindexed so bit (n-1-q) of a basis index belongs to qubit q.
        let x_idx = reverse_mask(self.x, self.n);
        let z_idx = reverse_mask(self.z, self.n);
        let base_phase = (self.phase as u32 + (self.x & self.z).count_ones()) % 4;
        for col in 0..dim {
            let row = col ^ x_idx as usize;
            let sign_flips = (col as u64 & z_idx).count_ones();
            let amp = PHASES[((base_phase + 2 * sign_flips) % 4) as usize];
            m[(row, col)] = amp;
        }
        m
    }
}

fn reverse_mask(mask: u64, n: usize) -> u64 {
    let mut out = 0u64;
    for q in 0..n {
        if mask >> q & 1 == 1 {
            out |= 1 << (n - 1 - q);
        }
    }
    out
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.phase {
            0 => {}
            1 => write!(f, "i")?,
            2 => write!(f, "-")?,
            3 => write!(f, "-i")?,
            _ => unreachable!(),
        }
        for q in 0..self.n {
            write!(f, "{}", self.letter(q).as_char())?;
        }
        Ok(())
    }
}

impl FromStr for PauliString {
    type Err = Error;

    /// Parses an optional sign/phase prefix (`-`, `i`, `-i`, `+`, `+i`)
    /// followed by letters over {I, X, Y, Z}.
    fn from_str(s: &str) -> Result<PauliString> {
        let mut rest = s;
        let mut phase = 0u8;
        if let Some(r) = rest.strip_prefix("-i") {
            phase = 3;
            rest = r;
        } else if let Some(r) = rest.strip_prefix("+i") {
            phase = 1;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('i') {
            phase = 1;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('-') {
            phase = 2;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        }
        if rest.is_empty() {
            return Err(Error::Parse(format!("no Pauli letters in {s:?}")));
        }
        let n = rest.chars().count();
        let mut string = PauliString::identity(n)?.with_phase(phase);
        for (q, c) in rest.chars().enumerate() {
            let p = Pauli::from_char(c)?;
            let (x, z) = p.bits();
            string.x |= (x as u64) << q;
            string.z |= (z as u64) << q;
        }
        Ok(string)
    }
}

/// Replacement table used when a bare Hamiltonian is rewritten over code
/// blocks: each single-qubit letter maps to an operator on one block.
#[derive(Debug, Clone)]
pub struct LogicalMap {
    block_size: usize,
    x: PauliString,
    y: PauliString,
    z: PauliString,
}

impl LogicalMap {
    pub fn new(x: PauliString, y: PauliString, z: PauliString) -> Result<LogicalMap> {
        let block_size = x.num_qubits();
        if y.num_qubits() != block_size || z.num_qubits() != block_size {
            return Err(Error::DimensionMismatch(
                "replacement operators act on different block sizes".into(),
            ));
        }
        Ok(LogicalMap {
            block_size,
            x,
            y,
            z,
        })
    }

    pub fn block_size(&self) -> usize {
        self.block_size
    }

    /// Replacement for one letter; identity maps to the identity block.
    pub fn replacement(&self, p: Pauli) -> PauliString {
        match p {
            Pauli::I => PauliString::identity(self.block_size).expect("valid block size"),
            Pauli::X => self.x,
            Pauli::Y => self.y,
            Pauli::Z => self.z,
        }
    }
}

/// A Hermitian operator stored as real coefficients on phase-normalized
/// Pauli strings. Terms are kept in a canonical order (masks ascending) so
/// that identical operators have identical representations and sums run in
/// a fixed order.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliSum {
    n: usize,
    terms: Vec<(f64, PauliString)>,
}

impl PauliSum {
    /// The zero operator on `n` qubits.
    pub fn new(n: usize) -> Result<PauliSum> {
        PauliString::check_qubits(n)?;
        Ok(PauliSum {
            n,
            terms: Vec::new(),
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(f64, PauliString)] {
        &self.terms
    }

    /// Add `coeff · string`. The string's phase exponent must be even; the
    /// resulting ±1 is folded into the coefficient so stored strings always
    /// have phase 0. Merging with an existing term and pruning of negligible
    /// coefficients happen immediately, keeping the representation canonical.
    pub fn add_term(&mut self, coeff: f64, string: PauliString) -> Result<()> {
        if string.num_qubits() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "term on {} qubits added to sum on {} qubits",
                string.num_qubits(),
                self.n
            )));
        }
        if !coeff.is_finite() {
            return Err(Error::InvalidParameter("non-finite coefficient".into()));
        }
        let (normalized, scalar) = string.phase_normalized();
        if scalar.im != 0.0 {
            return Err(Error::InvalidParameter(format!(
                "term {string} has an odd power of i; a real-weighted sum of it is not Hermitian"
            )));
        }
        let coeff = coeff * scalar.re;
        let key = (normalized.x, normalized.z);
        let pos = self.terms.binary_search_by_key(&key, |(_, s)| (s.x, s.z));
        match pos {
            Ok(idx) => {
                self.terms[idx].0 += coeff;
                if self.terms[idx].0.abs() <= crate::tol::COEFF_PRUNE {
                    self.terms.remove(idx);
                }
            }
            Err(idx) => {
                if coeff.abs() > crate::tol::COEFF_PRUNE {
                    self.terms.insert(idx, (coeff, normalized));
                }
            }
        }
        Ok(())
    }

    /// Sum of all terms of `other` into `self`, scaled by `factor`.
    pub fn add_scaled(&mut self, factor: f64, other: &PauliSum) -> Result<()> {
        for (c, s) in &other.terms {
            self.add_term(factor * c, *s)?;
        }
        Ok(())
    }

    pub fn scale(&mut self, factor: f64) {
        for (c, _) in &mut self.terms {
            *c *= factor;
        }
        self.terms
            .retain(|(c, _)| c.abs() > crate::tol::COEFF_PRUNE);
    }

    /// Largest term weight; 0 for the zero operator.
    pub fn locality(&self) -> u32 {
        self.terms
            .iter()
            .map(|(_, s)| s.weight())
            .max()
            .unwrap_or(0)
    }

    /// Sum of |coefficient|, an upper bound on the operator norm.
    pub fn coeff_norm(&self) -> f64 {
        self.terms.iter().map(|(c, _)| c.abs()).sum()
    }

    /// Trace of the dense matrix: only the identity string has one.
    pub fn trace(&self) -> f64 {
        let dim = (1u128 << self.n) as f64;
        self.terms
            .iter()
            .filter(|(_, s)| s.is_identity_string())
            .map(|(c, _)| c * dim)
            .sum()
    }

    /// Dense Hermitian matrix, summing term matrices in canonical term order.
    pub fn to_matrix(&self) -> Result<Array2<Complex64>> {
        self.to_matrix_with_limit(crate::matrix::DEFAULT_MATRIX_QUBITS)
    }

    /// As [`PauliSum::to_matrix`] with an explicit qubit cap.
    pub fn to_matrix_with_limit(&self, limit: usize) -> Result<Array2<Complex64>> {
        crate::matrix::check_matrix_qubits(self.n, limit)?;
        let dim = 1usize << self.n;
        let mut m = Array2::zeros((dim, dim));
        for (coeff, string) in &self.terms {
            // Same one-entry-per-column walk as PauliString::to_matrix,
            // accumulated in place to avoid a 2^n × 2^n temporary per term.
            let x_idx = reverse_mask(string.x, self.n);
            let z_idx = reverse_mask(string.z, self.n);
            let base_phase = (string.phase as u32 + (string.x & string.z).count_ones()) % 4;
            for col in 0..dim {
                let row = col ^ x_idx as usize;
                let sign_flips = (col as u64 & z_idx).count_ones();
                let amp = PHASES[((base_phase + 2 * sign_flips) % 4) as usize];
                m[(row, col)] += amp * *coeff;
            }
        }
        Ok(m)
    }

    /// Rewrite over code blocks: qubit `q` of the input becomes block `q`
    /// (physical qubits `q·m .. (q+1)·m`), each letter replaced per `map`.
    /// Replacement operators with phase −1 fold their sign into the
    /// coefficient, so the output is again a real-weighted sum.
    pub fn substitute(&self, map: &LogicalMap) -> Result<PauliSum> {
        let m = map.block_size();
        let total = self
            .n
            .checked_mul(m)
            .filter(|&t| t <= MAX_QUBITS)
            .ok_or_else(|| {
                Error::ResourceLimit(format!(
                    "{} blocks of {} qubits exceed the {MAX_QUBITS}-qubit mask width",
                    self.n, m
                ))
            })?;
        let mut out = PauliSum::new(total)?;
        for (coeff, string) in &self.terms {
            let mut x = 0u64;
            let mut z = 0u64;
            let mut phase = 0u8;
            for q in 0..self.n {
                let block = map.replacement(string.letter(q));
                x |= block.x << (q * m);
                z |= block.z << (q * m);
                phase = (phase + block.phase) % 4;
            }
            let embedded = PauliString {
                n: total,
                x,
                z,
                phase,
            };
            out.add_term(*coeff, embedded)?;
        }
        Ok(out)
    }

    /// Parse the text form: one `<coefficient> <letters>` pair per line.
    /// Blank lines and lines starting with `#` are skipped. All strings must
    /// agree on the qubit count.
    pub fn parse(text: &str) -> Result<PauliSum> {
        let mut entries: Vec<(f64, PauliString)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split_whitespace();
            let coeff_txt = fields.next().unwrap();
            let string_txt = fields.next().ok_or_else(|| {
                Error::Parse(format!(
                    "line {}: expected `<coefficient> <string>`",
                    lineno + 1
                ))
            })?;
            if let Some(extra) = fields.next() {
                return Err(Error::Parse(format!(
                    "line {}: unexpected trailing field {extra:?}",
                    lineno + 1
                )));
            }
            let coeff: f64 = coeff_txt.parse().map_err(|_| {
                Error::Parse(format!(
                    "line {}: bad coefficient {coeff_txt:?}",
                    lineno + 1
                ))
            })?;
            let string: PauliString = string_txt.parse().map_err(|e| match e {
                Error::Parse(msg) => Error::Parse(format!("line {}: {msg}", lineno + 1)),
                other => other,
            })?;
            entries.push((coeff, string));
        }
        let n = match entries.first() {
            Some((_, s)) => s.num_qubits(),
            None => {
                return Err(Error::Parse(
                    "empty operator text; at least one term line is required".into(),
                ))
            }
        };
        let mut sum = PauliSum::new(n)?;
        for (c, s) in entries {
            if s.num_qubits() != n {
                return Err(Error::Parse(format!(
                    "string {s} has {} letters, expected {n}",
                    s.num_qubits()
                )));
            }
            sum.add_term(c, s)?;
        }
        Ok(sum)
    }

    /// Inverse of [`PauliSum::parse`]; coefficients use the shortest
    /// round-trip float form.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (c, s) in &self.terms {
            out.push_str(&format!("{c} {s}\n"));
        }
        out
    }
}

/// Exact product of two sums, kept in Pauli form. Coefficient pairs whose
/// string product carries an odd power of i cancel only in Hermitian
/// combinations, so this returns an error if any surviving term would need an
/// imaginary coefficient (which cannot happen for products that are
/// themselves Hermitian, e.g. a commutator divided by 2i or an even power).
pub fn multiply_sums(a: &PauliSum, b: &PauliSum) -> Result<BTreeMap<(u64, u64), Complex64>> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch(format!(
            "cannot multiply sums on {} and {} qubits",
            a.n, b.n
        )));
    }
    let mut acc: BTreeMap<(u64, u64), Complex64> = BTreeMap::new();
    for (ca, sa) in &a.terms {
        for (cb, sb) in &b.terms {
            let prod = sa.multiply(sb)?;
            let (normalized, scalar) = prod.phase_normalized();
            let entry = acc
                .entry((normalized.x, normalized.z))
                .or_insert(Complex64::new(0.0, 0.0));
            *entry += scalar * Complex64::new(ca * cb, 0.0);
        }
    }
    acc.retain(|_, v| v.norm() > crate::tol::COEFF_PRUNE);
    Ok(acc)
}
