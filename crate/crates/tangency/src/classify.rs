//! From concrete polynomials to divisor types: exact classification of the
//! real-root multiplicity pattern, analysis of the negativity set {P ≤ 0}
//! into typed components, divisor-to-polynomial expansion, and a checker
//! for one-parameter degenerating families.

use std::fmt;
use std::str::FromStr;

use num::{BigRational, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::composition::Composition;
use crate::poly::{
    isolated_roots_with_multiplicity, ratio_from_str, ratio_to_string, RationalPolynomial,
    RootEnclosure,
};
use crate::poset::geq;
use crate::{BlockKind, Error, Result};

/// The divisor type of P: multiplicities of the distinct real roots in
/// ascending root order; empty when P has no real roots. Exact — no
/// tolerances, so nearby simple roots never merge.
pub fn classify(p: &RationalPolynomial) -> Result<Composition> {
    let roots = isolated_roots_with_multiplicity(p)?;
    let mults: Vec<u32> = roots.iter().map(|r| r.multiplicity).collect();
    Ok(Composition::new(mults).expect("root multiplicities are positive"))
}

/// One maximal connected component of {P ≤ 0}: the enclosures of its
/// extreme roots, its divisor type (always a bullet), and the 1-based index
/// of its minimal root within the global real-root order — the component's
/// marker.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NegativityComponent {
    pub component: (RootEnclosure, RootEnclosure),
    #[serde(rename = "type")]
    pub component_type: Composition,
    pub marker_root_index: usize,
}

impl NegativityComponent {
    pub fn kind(&self) -> BlockKind {
        if self.component_type.support_size() >= 2 {
            BlockKind::String
        } else {
            BlockKind::Atom
        }
    }

    /// Number of roots the component spans.
    pub fn root_count(&self) -> usize {
        self.component_type.support_size()
    }
}

impl fmt::Display for NegativityComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            BlockKind::Atom => write!(f, "{{{}}}", self.component.0)?,
            BlockKind::String => write!(f, "[{}, {}]", self.component.0, self.component.1)?,
        }
        write!(
            f,
            " type {:?} marker {}",
            self.component_type, self.marker_root_index
        )
    }
}

/// Splits {P ≤ 0} into its maximal components by evaluating the sign of P
/// at exact rational points strictly between consecutive roots — an
/// analysis independent of any combinatorial block rule, so the two can be
/// checked against each other.
pub fn negativity_components(p: &RationalPolynomial) -> Result<Vec<NegativityComponent>> {
    if p.is_zero() {
        return Err(Error::ZeroPoly);
    }
    let degree = p.degree().expect("nonzero");
    let lead = p.leading().expect("nonzero");
    if lead.is_negative() || degree % 2 == 1 {
        return Err(Error::UnboundedNegative);
    }
    let roots = isolated_roots_with_multiplicity(p)?;
    if roots.is_empty() {
        return Ok(Vec::new());
    }

    // sign of P strictly between root i and root i+1
    let two = BigRational::from_integer(2.into());
    let mut gap_negative = Vec::with_capacity(roots.len().saturating_sub(1));
    for pair in roots.windows(2) {
        let a = pair[0].enclosure.upper();
        let b = pair[1].enclosure.lower();
        debug_assert!(a < b, "separated enclosures");
        let sample = (a + b) / &two;
        let value = p.eval(&sample);
        debug_assert!(!value.is_zero(), "samples avoid all roots");
        gap_negative.push(value.is_negative());
    }

    let mut out = Vec::new();
    let mut start = 0usize;
    for i in 0..roots.len() {
        let joined_right = i + 1 < roots.len() && gap_negative[i];
        if joined_right {
            continue;
        }
        let mults: Vec<u32> = roots[start..=i].iter().map(|r| r.multiplicity).collect();
        let component_type = Composition::new(mults).expect("positive multiplicities");
        debug_assert!(component_type.is_bullet(), "components carry bullet types");
        out.push(NegativityComponent {
            component: (
                roots[start].enclosure.clone(),
                roots[i].enclosure.clone(),
            ),
            component_type,
            marker_root_index: start + 1,
        });
        start = i + 1;
    }
    Ok(out)
}

/// Monic expansion ∏(u−r)^m · ∏((u−re)² + im²)^m from real roots (strictly
/// ascending) and complex-conjugate pairs (im > 0).
pub fn expand_from_divisor(
    real: &[(BigRational, u32)],
    pairs: &[(BigRational, BigRational, u32)],
) -> Result<RationalPolynomial> {
    for w in real.windows(2) {
        if w[0].0 >= w[1].0 {
            return Err(Error::Order {
                detail: format!(
                    "real roots must be strictly ascending: {} then {}",
                    ratio_to_string(&w[0].0),
                    ratio_to_string(&w[1].0)
                ),
            });
        }
    }
    for (root, mult) in real {
        if *mult == 0 {
            return Err(Error::Domain {
                detail: format!("zero multiplicity at root {}", ratio_to_string(root)),
            });
        }
    }
    for (re, im, mult) in pairs {
        if !im.is_positive() {
            return Err(Error::Order {
                detail: format!(
                    "imaginary part must be positive: {}±{}i",
                    ratio_to_string(re),
                    ratio_to_string(im)
                ),
            });
        }
        if *mult == 0 {
            return Err(Error::Domain {
                detail: format!("zero multiplicity at pair {}±{}i", ratio_to_string(re), ratio_to_string(im)),
            });
        }
    }

    let mut out = RationalPolynomial::from_i64(&[1]);
    for (root, mult) in real {
        let factor = RationalPolynomial::linear(root);
        for _ in 0..*mult {
            out = &out * &factor;
        }
    }
    for (re, im, mult) in pairs {
        // (u − re)² + im²
        let shifted = RationalPolynomial::linear(re);
        let factor = &(&shifted * &shifted)
            + &RationalPolynomial::constant(im * im);
        for _ in 0..*mult {
            out = &out * &factor;
        }
    }
    Ok(out)
}

/// A polynomial in u whose coefficients are polynomials in one rational
/// parameter t. Text form: u-coefficients ascending, separated by `;`, each
/// a comma list of t-coefficients ascending — "0,0,-1;0;1" is u² − t².
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyPolynomial {
    pub u_coeffs: Vec<RationalPolynomial>,
}

impl FamilyPolynomial {
    pub fn at(&self, t: &BigRational) -> RationalPolynomial {
        RationalPolynomial::new(self.u_coeffs.iter().map(|c| c.eval(t)).collect())
    }
}

impl fmt::Display for FamilyPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for c in &self.u_coeffs {
            if !first {
                write!(f, ";")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for FamilyPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let u_coeffs = s
            .split(';')
            .map(|part| part.parse::<RationalPolynomial>())
            .collect::<Result<Vec<_>>>()?;
        Ok(FamilyPolynomial { u_coeffs })
    }
}

/// One classified sample of a family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySample {
    #[serde(with = "crate::poly::ratio_string")]
    pub t: BigRational,
    pub divisor_type: Composition,
}

/// Check of one adjacent pair of differing sample types, read toward the
/// degenerate end: the earlier (generic) type must dominate the later
/// (degenerate) one, and the reduced norm must strictly rise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitionCheck {
    #[serde(with = "crate::poly::ratio_string")]
    pub from_t: BigRational,
    #[serde(with = "crate::poly::ratio_string")]
    pub to_t: BigRational,
    pub generic: Composition,
    pub degenerate: Composition,
    pub order_holds: bool,
    pub reduced_norm_rises: bool,
}

impl TransitionCheck {
    pub fn passed(&self) -> bool {
        self.order_holds && self.reduced_norm_rises
    }
}

/// Full report of classify_family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub rows: Vec<FamilySample>,
    pub transitions: Vec<TransitionCheck>,
    pub consistent: bool,
}

/// Classifies the family at each sample (ordered toward the degenerate
/// parameter value) and checks every adjacent pair of differing types for
/// order compatibility.
pub fn classify_family(family: &FamilyPolynomial, samples: &[BigRational]) -> Result<FamilyReport> {
    if samples.is_empty() {
        return Err(Error::Domain {
            detail: "family classification needs at least one sample".into(),
        });
    }
    let mut rows = Vec::with_capacity(samples.len());
    for t in samples {
        let divisor_type = classify(&family.at(t))?;
        rows.push(FamilySample {
            t: t.clone(),
            divisor_type,
        });
    }
    let mut transitions = Vec::new();
    for pair in rows.windows(2) {
        let (generic, degenerate) = (&pair[0], &pair[1]);
        if generic.divisor_type == degenerate.divisor_type {
            continue;
        }
        transitions.push(TransitionCheck {
            from_t: generic.t.clone(),
            to_t: degenerate.t.clone(),
            generic: generic.divisor_type.clone(),
            degenerate: degenerate.divisor_type.clone(),
            order_holds: geq(&generic.divisor_type, &degenerate.divisor_type),
            reduced_norm_rises: degenerate.divisor_type.reduced_norm()
                > generic.divisor_type.reduced_norm(),
        });
    }
    let consistent = transitions.iter().all(TransitionCheck::passed);
    Ok(FamilyReport {
        rows,
        transitions,
        consistent,
    })
}

/// Parses a comma list of rational samples, e.g. "1,1/2,0".
pub fn parse_samples(s: &str) -> Result<Vec<BigRational>> {
    s.split(',').map(ratio_from_str).collect()
}
