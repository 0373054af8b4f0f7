//! Finite-basis graded-commutative algebras with structure constants.
//!
//! Every ring in scope has a monomial basis in which the product of two basis
//! elements is a scalar multiple of a single basis element. Base presets
//! store their structure constants as a dense table; tensor products keep
//! their factors and multiply componentwise with the Koszul sign, so large
//! tensor powers never materialize a quadratic table.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::coeff::Coeff;
use super::AlgebraError;

/// Size guard for tensor constructions.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    /// Maximum admissible basis size.
    pub max_basis: usize,
    /// Cap on basis pairs/triples enumerated during construction checks.
    pub max_checks: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_basis: 1_000_000,
            max_checks: 2_000_000,
        }
    }
}

#[derive(Debug, Clone)]
pub struct BasisMonomial {
    pub name: String,
    pub degree: u32,
}

enum Structure<C: Coeff> {
    /// Dense dim x dim table; entry = Some((basis index, coefficient)).
    Table(Vec<Option<(usize, C)>>),
    /// Tensor product of factor rings, slots ordered left to right.
    Tensor(Vec<Arc<GradedAlgebra<C>>>),
}

/// A finite-basis graded-commutative algebra over `C`.
pub struct GradedAlgebra<C: Coeff> {
    name: String,
    basis: Vec<BasisMonomial>,
    unit: usize,
    /// Indices of a multiplicative generating set; every non-unit basis
    /// monomial factors as (basis monomial) * (generator) with a +-1
    /// structure constant. Maps are checked against this set.
    generators: Vec<usize>,
    structure: Structure<C>,
}

impl<C: Coeff> GradedAlgebra<C> {
    /// Builds a base ring from an explicit multiplication table given as a
    /// list of (i, j, k, coeff) entries; omitted pairs multiply to zero.
    pub(crate) fn from_table(
        name: String,
        basis: Vec<BasisMonomial>,
        unit: usize,
        generators: Vec<usize>,
        entries: &[(usize, usize, usize, C)],
    ) -> Result<Arc<Self>, AlgebraError> {
        let dim = basis.len();
        let mut table = vec![None; dim * dim];
        for &(i, j, k, c) in entries {
            table[i * dim + j] = Some((k, c));
        }
        // Unit row/column.
        for i in 0..dim {
            table[unit * dim + i] = Some((i, C::one()));
            table[i * dim + unit] = Some((i, C::one()));
        }
        let ring = Arc::new(Self {
            name,
            basis,
            unit,
            generators,
            structure: Structure::Table(table),
        });
        ring.validate(Budget::default())?;
        Ok(ring)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn coeff_name(&self) -> &'static str {
        C::NAME
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn unit_index(&self) -> usize {
        self.unit
    }

    pub fn basis(&self) -> &[BasisMonomial] {
        &self.basis
    }

    pub fn degree(&self, idx: usize) -> u32 {
        self.basis[idx].degree
    }

    pub fn top_degree(&self) -> u32 {
        self.basis.iter().map(|b| b.degree).max().unwrap_or(0)
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn tensor_factors(&self) -> Option<&[Arc<GradedAlgebra<C>>]> {
        match &self.structure {
            Structure::Tensor(f) => Some(f),
            Structure::Table(_) => None,
        }
    }

    /// Looks up a basis element by name.
    pub fn basis_index(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.name == name)
    }

    /// Product of two basis monomials: single term or zero.
    pub fn mul_basis(&self, i: usize, j: usize) -> Option<(usize, C)> {
        match &self.structure {
            Structure::Table(t) => t[i * self.dim() + j],
            Structure::Tensor(factors) => {
                let iu = self.split_index(i);
                let iv = self.split_index(j);
                let mut sign_exp = 0u32;
                let mut coeff = C::one();
                let mut parts = Vec::with_capacity(factors.len());
                // Koszul: (u_1 x ... x u_n)(v_1 x ... x v_n) picks up
                // (-1)^{sum_{k>l} |u_k||v_l|}.
                let mut v_prefix = 0u32;
                for (k, f) in factors.iter().enumerate() {
                    sign_exp += f.degree(iu[k]) * v_prefix;
                    v_prefix += f.degree(iv[k]);
                }
                for (k, f) in factors.iter().enumerate() {
                    let (idx, c) = f.mul_basis(iu[k], iv[k])?;
                    coeff = coeff.mul(c);
                    parts.push(idx);
                }
                if coeff.is_zero() {
                    return None;
                }
                let c = coeff.mul(C::sign(sign_exp));
                Some((self.join_index(&parts), c))
            }
        }
    }

    /// Decomposes a tensor basis index into per-factor indices.
    pub fn split_index(&self, mut idx: usize) -> Vec<usize> {
        match &self.structure {
            Structure::Table(_) => vec![idx],
            Structure::Tensor(factors) => {
                let mut out = vec![0; factors.len()];
                for (k, f) in factors.iter().enumerate().rev() {
                    out[k] = idx % f.dim();
                    idx /= f.dim();
                }
                out
            }
        }
    }

    pub fn join_index(&self, parts: &[usize]) -> usize {
        match &self.structure {
            Structure::Table(_) => parts[0],
            Structure::Tensor(factors) => {
                let mut idx = 0;
                for (k, f) in factors.iter().enumerate() {
                    idx = idx * f.dim() + parts[k];
                }
                idx
            }
        }
    }

    /// Construction-time sanity checks: degree-additive multiplication,
    /// graded commutativity, unit identity, associativity; pairs/triples are
    /// enumerated exhaustively up to the check budget and sampled beyond it.
    pub fn validate(&self, budget: Budget) -> Result<(), AlgebraError> {
        let dim = self.dim();
        for i in 0..dim {
            let u = self.mul_basis(self.unit, i);
            if u != Some((i, C::one())) {
                return Err(AlgebraError::InvalidRing {
                    ring: self.name.clone(),
                    reason: "unit does not act as identity".into(),
                });
            }
        }
        for (i, j) in sample_pairs(dim, budget.max_checks) {
            let di = self.degree(i);
            let dj = self.degree(j);
            let uv = self.mul_basis(i, j);
            if let Some((k, _)) = uv {
                if self.degree(k) != di + dj {
                    return Err(AlgebraError::InvalidRing {
                        ring: self.name.clone(),
                        reason: format!(
                            "degree not additive on {} * {}",
                            self.basis[i].name, self.basis[j].name
                        ),
                    });
                }
            }
            // Graded commutativity u v = (-1)^{|u||v|} v u.
            let vu = self.mul_basis(j, i);
            let norm = |x: Option<(usize, C)>| x.filter(|(_, c)| !c.is_zero());
            let signed_vu = vu.map(|(k, c)| (k, c.mul(C::sign(di * dj))));
            if norm(uv) != norm(signed_vu) {
                return Err(AlgebraError::InvalidRing {
                    ring: self.name.clone(),
                    reason: format!(
                        "graded commutativity fails on {} * {}",
                        self.basis[i].name, self.basis[j].name
                    ),
                });
            }
        }
        for (i, j, k) in sample_triples(dim, budget.max_checks) {
            let left = self
                .mul_basis(i, j)
                .and_then(|(m, c)| self.mul_basis(m, k).map(|(f, d)| (f, c.mul(d))));
            let right = self
                .mul_basis(j, k)
                .and_then(|(m, c)| self.mul_basis(i, m).map(|(f, d)| (f, c.mul(d))));
            let norm = |x: Option<(usize, C)>| x.filter(|(_, c)| !c.is_zero());
            if norm(left) != norm(right) {
                return Err(AlgebraError::InvalidRing {
                    ring: self.name.clone(),
                    reason: format!(
                        "associativity fails on ({}, {}, {})",
                        self.basis[i].name, self.basis[j].name, self.basis[k].name
                    ),
                });
            }
        }
        Ok(())
    }

    // ----- element operations -------------------------------------------

    pub fn zero(&self) -> Elem<C> {
        Elem {
            terms: BTreeMap::new(),
        }
    }

    pub fn unit_elem(&self) -> Elem<C> {
        self.monomial(self.unit)
    }

    pub fn monomial(&self, idx: usize) -> Elem<C> {
        let mut terms = BTreeMap::new();
        terms.insert(idx, C::one());
        Elem { terms }
    }

    pub fn elem_from(&self, pairs: &[(usize, C)]) -> Elem<C> {
        let mut e = self.zero();
        for &(i, c) in pairs {
            e.add_term(i, c);
        }
        e
    }

    /// Element from a named generator string, e.g. `"a1"`.
    pub fn named(&self, name: &str) -> Result<Elem<C>, AlgebraError> {
        self.basis_index(name)
            .map(|i| self.monomial(i))
            .ok_or_else(|| AlgebraError::UnknownClass {
                name: name.to_string(),
                ring: self.name.clone(),
            })
    }

    pub fn add(&self, a: &Elem<C>, b: &Elem<C>) -> Elem<C> {
        let mut out = a.clone();
        for (&i, &c) in &b.terms {
            out.add_term(i, c);
        }
        out
    }

    pub fn sub(&self, a: &Elem<C>, b: &Elem<C>) -> Elem<C> {
        let mut out = a.clone();
        for (&i, &c) in &b.terms {
            out.add_term(i, c.neg());
        }
        out
    }

    pub fn scale(&self, a: &Elem<C>, c: C) -> Elem<C> {
        let mut out = self.zero();
        if c.is_zero() {
            return out;
        }
        for (&i, &d) in &a.terms {
            out.add_term(i, d.mul(c));
        }
        out
    }

    pub fn mul(&self, a: &Elem<C>, b: &Elem<C>) -> Elem<C> {
        let mut out = self.zero();
        for (&i, &c) in &a.terms {
            for (&j, &d) in &b.terms {
                if let Some((k, s)) = self.mul_basis(i, j) {
                    out.add_term(k, c.mul(d).mul(s));
                }
            }
        }
        out
    }

    pub fn product(&self, factors: &[Elem<C>]) -> Elem<C> {
        let mut acc = self.unit_elem();
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    pub fn pow(&self, a: &Elem<C>, k: usize) -> Elem<C> {
        let mut acc = self.unit_elem();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Degree if homogeneous (zero element reports `None`).
    pub fn homogeneous_degree(&self, a: &Elem<C>) -> Option<u32> {
        let mut deg = None;
        for &i in a.terms.keys() {
            let d = self.degree(i);
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        deg
    }

    pub fn display(&self, a: &Elem<C>) -> String {
        if a.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (&i, &c) in &a.terms {
            let name = &self.basis[i].name;
            if c == C::one() {
                parts.push(name.clone());
            } else if c == C::one().neg() && C::NAME != "F2" {
                parts.push(format!("-{name}"));
            } else {
                parts.push(format!("{c}*{name}"));
            }
        }
        parts.join(" + ")
    }
}

/// All index pairs when dim^2 fits the budget, else a deterministic
/// pseudo-random sample of roughly `limit` pairs.
fn sample_pairs(dim: usize, limit: usize) -> Vec<(usize, usize)> {
    if dim.saturating_mul(dim) <= limit {
        (0..dim)
            .flat_map(|i| (0..dim).map(move |j| (i, j)))
            .collect()
    } else {
        let mut state = 0x9e3779b97f4a7c15u64;
        (0..limit)
            .map(|_| {
                state = xorshift(state);
                let i = (state % dim as u64) as usize;
                state = xorshift(state);
                let j = (state % dim as u64) as usize;
                (i, j)
            })
            .collect()
    }
}

fn sample_triples(dim: usize, limit: usize) -> Vec<(usize, usize, usize)> {
    if dim.saturating_mul(dim).saturating_mul(dim) <= limit {
        (0..dim)
            .flat_map(|i| {
                (0..dim).flat_map(move |j| (0..dim).map(move |k| (i, j, k)))
            })
            .collect()
    } else {
        let mut state = 0x2545f4914f6cdd1du64;
        (0..limit)
            .map(|_| {
                state = xorshift(state);
                let i = (state % dim as u64) as usize;
                state = xorshift(state);
                let j = (state % dim as u64) as usize;
                state = xorshift(state);
                let k = (state % dim as u64) as usize;
                (i, j, k)
            })
            .collect()
    }
}

fn xorshift(mut x: u64) -> u64 {
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    x
}

/// Sparse ring element: basis index -> coefficient, zero terms dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Elem<C: Coeff> {
    terms: BTreeMap<usize, C>,
}

impl<C: Coeff> Elem<C> {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, C)> + '_ {
        self.terms.iter().map(|(&i, &c)| (i, c))
    }

    pub fn coeff(&self, idx: usize) -> C {
        self.terms.get(&idx).copied().unwrap_or_else(C::zero)
    }

    pub fn support(&self) -> Vec<usize> {
        self.terms.keys().copied().collect()
    }

    fn add_term(&mut self, idx: usize, c: C) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(idx).or_insert_with(C::zero);
        *entry = entry.add(c);
        if entry.is_zero() {
            self.terms.remove(&idx);
        }
    }
}

/// Tensor product of (possibly distinct) rings.
pub fn tensor_product<C: Coeff>(
    factors: Vec<Arc<GradedAlgebra<C>>>,
    budget: Budget,
) -> Result<Arc<GradedAlgebra<C>>, AlgebraError> {
    if factors.is_empty() {
        return Err(AlgebraError::BadParams {
            reason: "tensor product needs at least one factor".into(),
        });
    }
    if factors.len() == 1 {
        return Ok(factors.into_iter().next().unwrap());
    }
    let dim: usize = factors.iter().map(|f| f.dim()).try_fold(1usize, |acc, d| {
        acc.checked_mul(d).filter(|&x| x <= budget.max_basis)
    })
    .ok_or(AlgebraError::SizeBudgetExceeded {
        limit: budget.max_basis,
    })?;

    let mut basis = Vec::with_capacity(dim);
    let mut idx_parts = vec![0usize; factors.len()];
    'fill: loop {
        let name = factors
            .iter()
            .zip(&idx_parts)
            .map(|(f, &i)| f.basis()[i].name.clone())
            .collect::<Vec<_>>()
            .join("(x)");
        let degree = factors
            .iter()
            .zip(&idx_parts)
            .map(|(f, &i)| f.degree(i))
            .sum();
        basis.push(BasisMonomial { name, degree });
        // Mixed-radix increment, last factor fastest.
        for k in (0..factors.len()).rev() {
            idx_parts[k] += 1;
            if idx_parts[k] < factors[k].dim() {
                continue 'fill;
            }
            idx_parts[k] = 0;
        }
        break;
    }

    let ring = GradedAlgebra {
        name: format!(
            "tensor[{}]",
            factors
                .iter()
                .map(|f| f.name().to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ),
        basis,
        unit: 0,
        generators: Vec::new(),
        structure: Structure::Tensor(factors),
    };

    // Unit and generators in tensor coordinates.
    let unit = {
        let parts: Vec<usize> = ring
            .tensor_factors()
            .unwrap()
            .iter()
            .map(|f| f.unit_index())
            .collect();
        ring.join_index(&parts)
    };
    let mut generators = Vec::new();
    {
        let factors = ring.tensor_factors().unwrap().to_vec();
        for (slot, f) in factors.iter().enumerate() {
            for &g in f.generators() {
                let parts: Vec<usize> = factors
                    .iter()
                    .enumerate()
                    .map(|(k, fk)| if k == slot { g } else { fk.unit_index() })
                    .collect();
                generators.push(ring.join_index(&parts));
            }
        }
    }
    let ring = Arc::new(GradedAlgebra {
        unit,
        generators,
        ..ring
    });
    ring.validate(budget)?;
    Ok(ring)
}

/// n-fold tensor power.
pub fn tensor_power<C: Coeff>(
    ring: &Arc<GradedAlgebra<C>>,
    n: usize,
    budget: Budget,
) -> Result<Arc<GradedAlgebra<C>>, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::BadParams {
            reason: "tensor power needs n >= 1".into(),
        });
    }
    tensor_product(vec![ring.clone(); n], budget)
}

/// Places `elem` of the `slot`-th factor into the tensor ring (1 elsewhere).
pub fn include_in_slot<C: Coeff>(
    tensor: &GradedAlgebra<C>,
    slot: usize,
    elem: &Elem<C>,
) -> Elem<C> {
    let factors = tensor
        .tensor_factors()
        .expect("include_in_slot needs a tensor ring");
    let mut out = tensor.zero();
    for (i, c) in elem.terms() {
        let parts: Vec<usize> = factors
            .iter()
            .enumerate()
            .map(|(k, fk)| if k == slot { i } else { fk.unit_index() })
            .collect();
        out.add_term(tensor.join_index(&parts), c);
    }
    out
}
