//! Stabilizer code definitions and the checks that certify them.
//!
//! A code here is a set of commuting, independent Pauli generators on `n`
//! qubits together with one logical qubit's worth of encoded X, Y, Z
//! operators. Construction validates the whole algebra: generators commute
//! and are independent, logicals commute with the stabilizer, anticommute
//! pairwise, act nontrivially, and obey `Y̅ = i X̅ Z̅ · s` for a stabilizer
//! element `s` with a plus sign, so the encoded operators form a right-handed
//! Pauli frame on the codespace.

use crate::error::Error;
use crate::gf2::Gf2Space;
use crate::matrix;
use crate::pauli::{LogicalMap, Pauli, PauliString};
use crate::Result;
use ndarray::{Array1, Array2};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Amplitudes below this are treated as exact zeros of a codeword when
/// fixing its global phase.
const AMP_FLOOR: f64 = 1e-8;

/// An `[[n, 1]]` stabilizer code with a fixed choice of logical operators.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "CodeSpec", into = "CodeSpec")]
pub struct StabilizerCode {
    name: String,
    n: usize,
    generators: Vec<PauliString>,
    logical_x: PauliString,
    logical_y: PauliString,
    logical_z: PauliString,
}

impl StabilizerCode {
    /// Validates and builds a code. See the module docs for the conditions;
    /// any violation is reported as [`Error::InvalidCode`].
    pub fn new(
        name: impl Into<String>,
        generators: Vec<PauliString>,
        logical_x: PauliString,
        logical_y: PauliString,
        logical_z: PauliString,
    ) -> Result<StabilizerCode> {
        let name = name.into();
        let n = logical_x.num_qubits();
        for s in generators
            .iter()
            .chain([&logical_x, &logical_y, &logical_z])
        {
            if s.num_qubits() != n {
                return Err(Error::DimensionMismatch(format!(
                    "operator {s} acts on {} qubits, expected {n}",
                    s.num_qubits()
                )));
            }
        }
        if generators.len() + 1 != n {
            return Err(Error::InvalidCode(format!(
                "{} generators on {n} qubits do not leave exactly one logical qubit",
                generators.len()
            )));
        }

        let mut span = Gf2Space::new();
        for (i, g) in generators.iter().enumerate() {
            if g.hermitian_sign().is_none() {
                return Err(Error::InvalidCode(format!(
                    "generator {g} carries an odd power of i and is not Hermitian"
                )));
            }
            if g.is_identity_string() {
                return Err(Error::InvalidCode("identity listed as a generator".into()));
            }
            for h in &generators[..i] {
                if !g.commutes_with(h)? {
                    return Err(Error::InvalidCode(format!(
                        "generators {h} and {g} anticommute"
                    )));
                }
            }
            if !span.insert_string(g) {
                return Err(Error::InvalidCode(format!(
                    "generator {g} is a product of earlier generators"
                )));
            }
        }

        let logicals = [("X", &logical_x), ("Y", &logical_y), ("Z", &logical_z)];
        for (label, l) in logicals {
            if l.hermitian_sign().is_none() {
                return Err(Error::InvalidCode(format!(
                    "logical {label} = {l} is not Hermitian"
                )));
            }
            for g in &generators {
                if !l.commutes_with(g)? {
                    return Err(Error::InvalidCode(format!(
                        "logical {label} = {l} anticommutes with generator {g}"
                    )));
                }
            }
            if span.contains_string(l) {
                return Err(Error::InvalidCode(format!(
                    "logical {label} = {l} is a stabilizer element and acts trivially"
                )));
            }
        }
        for (i, (label_a, a)) in logicals.iter().enumerate() {
            for (label_b, b) in &logicals[i + 1..] {
                if a.commutes_with(b)? {
                    return Err(Error::InvalidCode(format!(
                        "logicals {label_a} and {label_b} commute; they must anticommute"
                    )));
                }
            }
        }

        // Y̅ must equal i X̅ Z̅ · s with s a stabilizer element carrying a
        // plus sign, which is equivalent to (i X̅ Z̅) Y̅ reducing to +identity
        // through the signed generator span.
        let mut product = logical_x.multiply(&logical_z)?;
        product = product.with_phase((product.phase_exp() + 1) % 4);
        let residue = reduce_signed(&signed_echelon(&generators)?, product.multiply(&logical_y)?);
        if !residue.is_identity_string() {
            return Err(Error::InvalidCode(
                "i X̅ Z̅ Y̅ does not lie in the stabilizer group".into(),
            ));
        }
        if residue.phase_exp() != 0 {
            return Err(Error::InvalidCode(format!(
                "Y̅ differs from i X̅ Z̅ by a stabilizer element with sign i^{}; the logical frame is not right-handed",
                residue.phase_exp()
            )));
        }

        Ok(StabilizerCode {
            name,
            n,
            generators,
            logical_x,
            logical_y,
            logical_z,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    /// Always 1 for codes this type accepts.
    pub fn num_logical(&self) -> usize {
        self.n - self.generators.len()
    }

    pub fn generators(&self) -> &[PauliString] {
        &self.generators
    }

    pub fn logical_x(&self) -> PauliString {
        self.logical_x
    }

    pub fn logical_y(&self) -> PauliString {
        self.logical_y
    }

    pub fn logical_z(&self) -> PauliString {
        self.logical_z
    }

    /// Substitution table sending single-qubit letters to the logicals.
    pub fn logical_map(&self) -> LogicalMap {
        LogicalMap::new(self.logical_x, self.logical_y, self.logical_z)
            .expect("logicals share one block size by construction")
    }

    /// Phase-blind span of the generators.
    pub fn stabilizer_span(&self) -> Gf2Space {
        let mut span = Gf2Space::new();
        for g in &self.generators {
            span.insert_string(g);
        }
        span
    }
}

/// Row-echelon basis of the signed stabilizer group: strings whose products
/// reproduce every group element with its exact sign.
fn signed_echelon(generators: &[PauliString]) -> Result<Vec<(u128, PauliString)>> {
    let mut rows: Vec<(u128, PauliString)> = Vec::new();
    for &g in generators {
        let reduced = reduce_signed(&rows, g);
        if !reduced.is_identity_string() {
            rows.push((Gf2Space::vector_of(&reduced), reduced));
            rows.sort_unstable_by_key(|(v, _)| std::cmp::Reverse(*v));
        }
    }
    Ok(rows)
}

/// Multiplies `s` by echelon rows until no leading bit matches; all operands
/// commute here, so the accumulated phase is unambiguous.
fn reduce_signed(rows: &[(u128, PauliString)], s: PauliString) -> PauliString {
    let mut acc = s;
    for (vec, row) in rows {
        let lead = 127 - vec.leading_zeros();
        if Gf2Space::vector_of(&acc) >> lead & 1 == 1 {
            acc = acc.multiply(row).expect("rows share the qubit count");
        }
    }
    acc
}

/// The `[[4, 1, 2]]` code whose logicals are 2-local.
pub fn four_qubit_code() -> StabilizerCode {
    StabilizerCode::new(
        "four_qubit",
        vec![p("XXXX"), p("ZZZZ"), p("XYZI")],
        p("YIYI"),
        p("-IXXI"),
        p("ZZII"),
    )
    .expect("built-in code is valid")
}

/// The `[[5, 1, 3]]` code with a generator choice giving 3-local logicals.
pub fn five_qubit_code() -> StabilizerCode {
    StabilizerCode::new(
        "five_qubit",
        vec![p("XZZXI"), p("IXZZX"), p("XIXZZ"), p("ZXIXZ")],
        p("-XIYYI"),
        p("-ZZIYI"),
        p("-YZYII"),
    )
    .expect("built-in code is valid")
}

fn p(text: &str) -> PauliString {
    text.parse().expect("literal Pauli string")
}

/// Orthogonal projector onto the joint +1 eigenspace of the generators,
/// `∏ (1 + G_i)/2`.
pub fn codespace_projector(code: &StabilizerCode) -> Result<Array2<Complex64>> {
    matrix::check_matrix_qubits(code.num_qubits(), matrix::DEFAULT_MATRIX_QUBITS)?;
    let dim = 1usize << code.num_qubits();
    let mut proj = Array2::eye(dim);
    for g in code.generators() {
        let mut factor = g.to_matrix();
        for i in 0..dim {
            factor[(i, i)] += Complex64::new(1.0, 0.0);
        }
        proj = proj.dot(&factor) / Complex64::new(2.0, 0.0);
    }
    Ok(proj)
}

/// The codewords `(|0̅⟩, |1̅⟩)`: the +1 eigenvector of the logical Z inside
/// the codespace, with its first nonzero amplitude rotated to the positive
/// real axis, and the image of that vector under the logical X. With this
/// convention the logical action table holds exactly:
/// `X̅|0̅⟩ = |1̅⟩`, `Y̅|0̅⟩ = i|1̅⟩`, `Z̅|1̅⟩ = −|1̅⟩`.
pub fn extract_codewords(code: &StabilizerCode) -> Result<(Array1<Complex64>, Array1<Complex64>)> {
    let proj = codespace_projector(code)?;
    let dim = proj.nrows();
    let mut zplus = code.logical_z().to_matrix();
    for i in 0..dim {
        zplus[(i, i)] += Complex64::new(1.0, 0.0);
    }
    let q0 = proj.dot(&zplus) / Complex64::new(2.0, 0.0);
    let trace: Complex64 = (0..dim).map(|i| q0[(i, i)]).sum();
    if (trace - Complex64::new(1.0, 0.0)).norm() > crate::tol::EIGH_RESIDUAL {
        return Err(Error::Numerical(format!(
            "projector onto the logical-Z +1 codespace has trace {trace}, expected 1"
        )));
    }

    let mut best = 0usize;
    let mut best_norm = 0.0f64;
    for c in 0..dim {
        let norm: f64 = (0..dim).map(|r| q0[(r, c)].norm_sqr()).sum::<f64>().sqrt();
        if norm > best_norm + AMP_FLOOR {
            best = c;
            best_norm = norm;
        }
    }
    if best_norm <= AMP_FLOOR {
        return Err(Error::Numerical(
            "logical-Z codespace projector has no usable column".into(),
        ));
    }
    let mut zero: Array1<Complex64> = q0.column(best).mapv(|v| v / best_norm);
    let lead = zero
        .iter()
        .find(|v| v.norm() > AMP_FLOOR)
        .expect("normalized vector has a nonzero entry");
    let rotation = lead.conj() / lead.norm();
    zero.mapv_inplace(|v| v * rotation);

    let one = code.logical_x().to_matrix().dot(&zero);
    Ok((zero, one))
}

/// Syndrome of one single-qubit error: which generators it anticommutes with.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SyndromeEntry {
    pub qubit: usize,
    pub error: char,
    pub flipped_generators: Vec<usize>,
}

/// Syndromes of all `3n` single-qubit errors, qubit-major with the letters
/// ordered X, Y, Z. An empty `flipped_generators` set marks an undetected
/// error.
pub fn verify_detection(code: &StabilizerCode) -> Vec<SyndromeEntry> {
    let n = code.num_qubits();
    let mut table = Vec::with_capacity(3 * n);
    for qubit in 0..n {
        for letter in Pauli::NONTRIVIAL {
            let err = PauliString::single(n, qubit, letter).expect("qubit in range");
            let flipped: Vec<usize> = code
                .generators()
                .iter()
                .enumerate()
                .filter(|(_, g)| !err.commutes_with(g).expect("same qubit count"))
                .map(|(i, _)| i)
                .collect();
            table.push(SyndromeEntry {
                qubit,
                error: letter.as_char(),
                flipped_generators: flipped,
            });
        }
    }
    table
}

/// Code distance: the smallest weight of a Pauli string that commutes with
/// every generator yet lies outside the stabilizer group. Found by exhaustive
/// enumeration in order of increasing weight, so the result is exact.
pub fn distance(code: &StabilizerCode) -> Result<u32> {
    let n = code.num_qubits();
    if n > 12 {
        return Err(Error::ResourceLimit(format!(
            "distance enumeration visits 4^{n} strings; supported up to 12 qubits"
        )));
    }
    let span = code.stabilizer_span();
    for weight in 1..=n as u32 {
        for support in 0u64..(1 << n) {
            if support.count_ones() != weight {
                continue;
            }
            let positions: Vec<usize> = (0..n).filter(|q| support >> q & 1 == 1).collect();
            let combos = 3usize.pow(weight);
            for mut combo in 0..combos {
                let mut x = 0u64;
                let mut z = 0u64;
                for &q in &positions {
                    let (bx, bz) = Pauli::NONTRIVIAL[combo % 3].bits();
                    x |= (bx as u64) << q;
                    z |= (bz as u64) << q;
                    combo /= 3;
                }
                let candidate = PauliString::from_masks(n, x, z)?;
                let undetected = code
                    .generators()
                    .iter()
                    .all(|g| candidate.commutes_with(g).unwrap_or(false));
                if undetected && !span.contains_string(&candidate) {
                    return Ok(weight);
                }
            }
        }
    }
    Err(Error::InvalidCode(
        "no logical operator found; the generators span everything".into(),
    ))
}

/// Everything the verification pipeline certifies about one code, in a form
/// ready for serialization.
#[derive(Debug, Clone, Serialize)]
pub struct CodeReport {
    pub name: String,
    pub num_qubits: usize,
    pub num_generators: usize,
    pub distance: u32,
    pub logical_weights: [u32; 3],
    pub all_single_errors_detected: bool,
    pub syndromes: Vec<SyndromeEntry>,
}

impl CodeReport {
    pub fn for_code(code: &StabilizerCode) -> Result<CodeReport> {
        let syndromes = verify_detection(code);
        let all_detected = syndromes.iter().all(|s| !s.flipped_generators.is_empty());
        Ok(CodeReport {
            name: code.name().to_string(),
            num_qubits: code.num_qubits(),
            num_generators: code.generators().len(),
            distance: distance(code)?,
            logical_weights: [
                code.logical_x().weight(),
                code.logical_y().weight(),
                code.logical_z().weight(),
            ],
            all_single_errors_detected: all_detected,
            syndromes,
        })
    }
}

/// Serialized form of a code: strings with optional sign/phase prefixes.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CodeSpec {
    name: String,
    n: usize,
    k: usize,
    generators: Vec<String>,
    logical_x: String,
    logical_y: String,
    logical_z: String,
}

impl TryFrom<CodeSpec> for StabilizerCode {
    type Error = Error;

    fn try_from(spec: CodeSpec) -> Result<StabilizerCode> {
        let generators = spec
            .generators
            .iter()
            .map(|g| g.parse())
            .collect::<Result<Vec<PauliString>>>()?;
        let code = StabilizerCode::new(
            spec.name,
            generators,
            spec.logical_x.parse()?,
            spec.logical_y.parse()?,
            spec.logical_z.parse()?,
        )?;
        if code.num_qubits() != spec.n || code.num_logical() != spec.k {
            return Err(Error::InvalidCode(format!(
                "declared [[{}, {}]] but the operators define [[{}, {}]]",
                spec.n,
                spec.k,
                code.num_qubits(),
                code.num_logical()
            )));
        }
        Ok(code)
    }
}

impl From<StabilizerCode> for CodeSpec {
    fn from(code: StabilizerCode) -> CodeSpec {
        CodeSpec {
            name: code.name.clone(),
            n: code.num_qubits(),
            k: code.num_logical(),
            generators: code.generators.iter().map(|g| g.to_string()).collect(),
            logical_x: code.logical_x.to_string(),
            logical_y: code.logical_y.to_string(),
            logical_z: code.logical_z.to_string(),
        }
    }
}
