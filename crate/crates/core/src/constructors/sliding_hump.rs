//! Sliding-hump extraction over a finite index range `[0, L)`.
//!
//! `N_α = min_{x∈S} ‖x↾[0,α)‖₁` is nondecreasing in `α`. A finite family
//! always ends with `N_L = 1`, so "eventually constant" is modelled by the
//! longest maximal run of constant `N_α` (earliest on ties): `α₀` is its
//! onset and `N = N_{α₀}`. Extraction then alternates choosing the
//! lowest-index member with `‖x↾[0,α_γ)‖₁ ≤ N + ε` and moving the cut past
//! every support chosen so far.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{q, ExactVector, NormTag, Rational};

/// Describes how `α₀` was chosen; recorded in every output.
pub const ALPHA0_RULE: &str = "onset of the longest maximal run of constant N_alpha (earliest on ties)";

#[derive(Clone, Debug, Serialize)]
pub struct ExtractedMember {
    /// Index into the source family.
    pub source: usize,
    /// Cut index `α_γ`.
    pub cut: usize,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct PropertyFlags {
    /// `‖x_γ↾[0,α_γ)‖ ≤ N + ε`
    pub head_small: bool,
    /// `supp(x_β) < α_γ` for `β < γ`
    pub earlier_supports_below_cut: bool,
    /// `‖x_γ↾[α_γ,L)‖ ≥ 1 − N − ε`
    pub tail_large: bool,
    /// `‖x_γ↾[α₀,α_γ)‖ ≤ ε`
    pub middle_small: bool,
}

impl PropertyFlags {
    pub fn all(&self) -> bool {
        self.head_small && self.earlier_supports_below_cut && self.tail_large && self.middle_small
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SlidingHumpData {
    pub len: usize,
    pub family: Vec<ExactVector>,
    pub epsilon: Rational,
    /// `N_α` for `α = 0..=L`.
    pub n_table: Vec<Rational>,
    pub alpha0: usize,
    /// Last index of the plateau starting at `α₀`.
    pub plateau_end: usize,
    pub n_value: Rational,
    pub extracted: Vec<ExtractedMember>,
    pub properties: PropertyFlags,
    pub alpha0_rule: &'static str,
}

impl SlidingHumpData {
    pub fn extracted_vectors(&self) -> Vec<&ExactVector> {
        self.extracted.iter().map(|m| &self.family[m.source]).collect()
    }

    /// Re-check (i)–(iv) exactly on the stored extraction.
    pub fn check_properties(&self) -> PropertyFlags {
        let bound_head = &self.n_value + &self.epsilon;
        let bound_tail = &(Rational::one() - &self.n_value) - &self.epsilon;
        let mut flags = PropertyFlags {
            head_small: true,
            earlier_supports_below_cut: true,
            tail_large: true,
            middle_small: true,
        };
        for (g, member) in self.extracted.iter().enumerate() {
            let x = &self.family[member.source];
            let cut = member.cut.min(self.len);
            flags.head_small &= x.restrict(0..cut).l1() <= bound_head;
            flags.tail_large &= x.restrict(cut..self.len).l1() >= bound_tail;
            flags.middle_small &= x.restrict(self.alpha0..cut).l1() <= self.epsilon;
            flags.earlier_supports_below_cut &= self.extracted[..g]
                .iter()
                .all(|prev| self.family[prev.source].support_end() <= member.cut);
        }
        flags
    }
}

/// `N_α` for `α = 0..=L`.
pub fn n_alpha_table(family: &[ExactVector], len: usize) -> Vec<Rational> {
    let prefixes: Vec<Vec<Rational>> = family.iter().map(|x| prefix_masses(x, len)).collect();
    (0..=len)
        .map(|a| {
            prefixes
                .iter()
                .map(|p| p[a].clone())
                .min()
                .unwrap_or_else(Rational::zero)
        })
        .collect()
}

/// `‖x↾[0,α)‖₁` for `α = 0..=L`.
fn prefix_masses(x: &ExactVector, len: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(len + 1);
    let mut acc = Rational::zero();
    out.push(acc.clone());
    for c in x.coords().iter().take(len) {
        acc += &c.abs();
        out.push(acc.clone());
    }
    out
}

/// Longest maximal constant run `[start, end]` of the table, earliest on ties.
fn longest_plateau(table: &[Rational]) -> (usize, usize) {
    let mut best = (0, 0);
    let mut start = 0;
    for i in 1..=table.len() {
        if i == table.len() || table[i] != table[start] {
            if i - 1 - start > best.1 - best.0 {
                best = (start, i - 1);
            }
            start = i;
        }
    }
    best
}

pub fn sliding_hump_extract(family: &[ExactVector], epsilon: &Rational) -> Result<SlidingHumpData> {
    let Some(first) = family.first() else {
        return Err(Error::Domain("empty family".into()));
    };
    let len = first.dim();
    for (i, x) in family.iter().enumerate() {
        if x.dim() != len {
            return Err(Error::Domain(format!("member {i} has dimension {} ≠ {len}", x.dim())));
        }
        if x.l1() != Rational::one() {
            return Err(Error::Domain(format!("member {i} has ‖x‖₁ = {} ≠ 1", x.l1())));
        }
    }
    if !epsilon.is_positive() {
        return Err(Error::Domain(format!("ε = {epsilon} must be positive")));
    }

    let n_table = n_alpha_table(family, len);
    let (alpha0, plateau_end) = longest_plateau(&n_table);
    let n_value = n_table[alpha0].clone();
    if n_value == Rational::one() {
        return Err(Error::Domain(format!(
            "family supported below α₀ = {alpha0}: N = 1, every member lives in [0, {alpha0})"
        )));
    }
    let one_minus_n = Rational::one() - &n_value;
    if &one_minus_n - &(&q(2, 1) * epsilon) < &one_minus_n * &q(1, 2) {
        return Err(Error::Domain(format!(
            "ε = {epsilon} violates 1 − N − 2ε ≥ (1 − N)/2 for N = {n_value} (need ε ≤ {})",
            &one_minus_n * &q(1, 4)
        )));
    }

    let prefixes: Vec<Vec<Rational>> = family.iter().map(|x| prefix_masses(x, len)).collect();
    let head_bound = &n_value + epsilon;
    let mut extracted: Vec<ExtractedMember> = Vec::new();
    let mut cut = alpha0;
    while cut <= len {
        let Some(source) = (0..family.len())
            .find(|&i| !extracted.iter().any(|m| m.source == i) && prefixes[i][cut] <= head_bound)
        else {
            break;
        };
        extracted.push(ExtractedMember { source, cut });
        cut = extracted
            .iter()
            .map(|m| family[m.source].support_end())
            .max()
            .unwrap_or(cut)
            .max(cut + 1);
    }

    let mut data = SlidingHumpData {
        len,
        family: family.to_vec(),
        epsilon: epsilon.clone(),
        n_table,
        alpha0,
        plateau_end,
        n_value,
        extracted,
        properties: PropertyFlags::default(),
        alpha0_rule: ALPHA0_RULE,
    };
    data.properties = data.check_properties();
    if !data.properties.all() {
        return Err(Error::cert(
            "sliding-hump properties (i)-(iv)",
            format!("{:?}", data.properties),
        ));
    }
    Ok(data)
}

/// A family over `[0, len)` whose members carry exactly `head_mass` on
/// `[0, head_width)` and the rest on pairwise disjoint tail blocks of
/// `tail_width` coordinates. Signs alternate so combinations can cancel in
/// the head. `decoys` extra members with head mass 9/10 and a tail spread
/// over the whole range are placed first; they never qualify for
/// extraction.
pub fn prescribed_mass_family(
    len: usize,
    head_mass: &Rational,
    head_width: usize,
    tail_width: usize,
    decoys: usize,
) -> Result<Vec<ExactVector>> {
    if head_width == 0 || tail_width == 0 || head_width + tail_width > len {
        return Err(Error::Domain("head and tail blocks do not fit in the index range".into()));
    }
    if head_mass.is_negative() || *head_mass >= Rational::one() {
        return Err(Error::Domain(format!("head mass {head_mass} must lie in [0, 1)")));
    }
    let sign = |i: usize| if i % 2 == 0 { Rational::one() } else { -Rational::one() };
    let head_each = head_mass / &Rational::integer(head_width as i64);
    let tail_each = &(Rational::one() - head_mass) / &Rational::integer(tail_width as i64);
    let members = (len - head_width) / tail_width;

    let mut out = Vec::with_capacity(members + decoys);
    let decoy_head = q(9, 10);
    let spread = len - head_width;
    for d in 0..decoys {
        let mut v = ExactVector::zeros(len, NormTag::L1);
        for c in 0..head_width {
            v.set(c, &sign(c + d) * &(&decoy_head / &Rational::integer(head_width as i64)));
        }
        let tail_c = &q(1, 10) / &Rational::integer(spread as i64);
        for c in head_width..len {
            v.set(c, tail_c.clone());
        }
        out.push(v);
    }
    for m in 0..members {
        let mut v = ExactVector::zeros(len, NormTag::L1);
        for c in 0..head_width {
            v.set(c, &sign(c + m / 2) * &head_each);
        }
        let start = head_width + m * tail_width;
        for c in start..start + tail_width {
            v.set(c, &sign(c + m) * &tail_each);
        }
        out.push(v);
    }
    Ok(out)
}
