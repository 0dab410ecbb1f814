//! Sequence descriptors: rule-generated or explicitly listed sequences of
//! orbit parameters, their samples, and limits of the scalar quantities the
//! convergence conditions look at.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::weights::DominantWeight;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DescriptorError {
    #[error("malformed descriptor: {0}")]
    Malformed(String),
    #[error("sample index {k} out of range 1..={len}")]
    IndexOutOfRange { k: usize, len: usize },
}

fn malformed<T>(msg: impl Into<String>) -> Result<T, DescriptorError> {
    Err(DescriptorError::Malformed(msg.into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    #[default]
    Generic,
    Intermediate,
    Character,
}

/// Real sequence `a_k`, `k = 1, 2, …`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "lowercase", deny_unknown_fields)]
pub enum ScalarRule {
    /// `values[k-1]`
    Explicit { values: Vec<f64> },
    Constant { value: f64 },
    /// `offset + c/k`
    Harmonic {
        c: f64,
        #[serde(default)]
        offset: f64,
    },
    /// `offset + c/k^p`, `p > 0`
    Power {
        c: f64,
        p: f64,
        #[serde(default)]
        offset: f64,
    },
    /// `offset + c·q^k`, `|q| < 1`
    Geometric {
        c: f64,
        q: f64,
        #[serde(default)]
        offset: f64,
    },
}

impl ScalarRule {
    fn validate(&self, k_max: usize) -> Result<(), DescriptorError> {
        let finite = |v: f64, what: &str| if v.is_finite() { Ok(()) } else { malformed(format!("{what} must be finite")) };
        match self {
            ScalarRule::Explicit { values } => {
                if values.len() < k_max {
                    return malformed(format!("explicit list has {} values, K = {k_max}", values.len()));
                }
                values.iter().try_for_each(|&v| finite(v, "explicit value"))
            }
            ScalarRule::Constant { value } => finite(*value, "value"),
            ScalarRule::Harmonic { c, offset } => finite(*c, "c").and(finite(*offset, "offset")),
            ScalarRule::Power { c, p, offset } => {
                finite(*c, "c")?;
                finite(*offset, "offset")?;
                if !(*p > 0.0 && p.is_finite()) {
                    return malformed("power rule needs p > 0");
                }
                Ok(())
            }
            ScalarRule::Geometric { c, q, offset } => {
                finite(*c, "c")?;
                finite(*offset, "offset")?;
                if !(q.abs() < 1.0) {
                    return malformed("geometric rule needs |q| < 1");
                }
                Ok(())
            }
        }
    }

    pub fn value(&self, k: usize) -> f64 {
        let kf = k as f64;
        match self {
            ScalarRule::Explicit { values } => values[k - 1],
            ScalarRule::Constant { value } => *value,
            ScalarRule::Harmonic { c, offset } => offset + c / kf,
            ScalarRule::Power { c, p, offset } => offset + c / kf.powf(*p),
            ScalarRule::Geometric { c, q, offset } => offset + c * q.powi(k as i32),
        }
    }

    /// Analytic limit, `None` for explicit lists.
    fn analytic_limit(&self) -> Option<f64> {
        match self {
            ScalarRule::Explicit { .. } => None,
            ScalarRule::Constant { value } => Some(*value),
            ScalarRule::Harmonic { offset, .. } | ScalarRule::Power { offset, .. } | ScalarRule::Geometric { offset, .. } => {
                Some(*offset)
            }
        }
    }

    /// `lim a_k · k` for rules with `lim a_k = 0`.
    fn limit_times_k(&self) -> Option<Limit> {
        match self {
            ScalarRule::Harmonic { c, offset } if *offset == 0.0 => Some(Limit::Finite(*c)),
            ScalarRule::Power { c, p, offset } if *offset == 0.0 => Some(if *p > 1.0 {
                Limit::Finite(0.0)
            } else if *p == 1.0 {
                Limit::Finite(*c)
            } else {
                Limit::infinite(*c)
            }),
            ScalarRule::Geometric { offset, .. } if *offset == 0.0 => Some(Limit::Finite(0.0)),
            _ => None,
        }
    }
}

/// Rule for the one entry of a weight allowed to vary with `k`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "lowercase", deny_unknown_fields)]
pub enum TailRule {
    Explicit { values: Vec<i64> },
    Constant { value: i64 },
    /// `a + b·k`
    Affine { a: i64, b: i64 },
    /// `round(c / α_k)`; generic family only.
    Linked { c: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Position {
    First,
    Last,
}

/// Weight sequence: either an explicit per-`k` list, or a constant `head`
/// with an optional varying `tail` entry placed first or last.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct WeightRule {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub head: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tail: Option<TailRule>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub position: Option<Position>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub list: Option<Vec<Vec<i64>>>,
}

/// How one coordinate of a weight sequence behaves, as far as the limit
/// engine is concerned.
#[derive(Clone, Debug, PartialEq)]
pub(crate) enum EntryModel {
    Constant(i64),
    Affine { a: i64, b: i64 },
    Linked { c: f64 },
    Sampled,
}

/// The JSON form of a descriptor.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DescriptorSpec {
    #[serde(default)]
    pub family: Family,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<ScalarRule>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<WeightRule>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<WeightRule>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<ScalarRule>,
    #[serde(rename = "K")]
    pub k: usize,
    /// Tolerance for limits read off explicit lists (the tail window must be
    /// stable to within it, and the limit must match a target to within it).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub explicit_tol: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum Samples {
    Generic { alpha: Vec<f64>, lambda: Vec<DominantWeight> },
    Intermediate { r: Vec<f64>, mu: Vec<DominantWeight> },
    Character { lambda: Vec<DominantWeight> },
}

/// A validated, fully sampled sequence of orbit parameters of `G_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct SequenceDescriptor {
    spec: DescriptorSpec,
    pub(crate) samples: Samples,
    /// Per-coordinate models of the weight sequence (`λᵏ` or `μᵏ`).
    pub(crate) entries: Vec<EntryModel>,
    pub(crate) position: Position,
}

/// One sample of a descriptor.
#[derive(Clone, Debug, PartialEq)]
pub enum SampleParam<'a> {
    Generic { lambda: &'a DominantWeight, alpha: f64 },
    Intermediate { mu: &'a DominantWeight, r: f64 },
    Character { lambda: &'a DominantWeight },
}

impl SequenceDescriptor {
    pub fn from_spec(spec: DescriptorSpec) -> Result<Self, DescriptorError> {
        let k_max = spec.k;
        if k_max == 0 {
            return malformed("K must be positive");
        }
        if spec.n == 0 {
            return malformed("n must be positive");
        }
        if let Some(t) = spec.explicit_tol {
            if !(t > 0.0 && t.is_finite()) {
                return malformed("explicit_tol must be positive");
            }
        }
        let (samples, entries, position) = match spec.family {
            Family::Generic => {
                if spec.mu.is_some() || spec.r.is_some() {
                    return malformed("generic descriptors take 'alpha' and 'lambda' only");
                }
                let alpha_rule = spec.alpha.as_ref().ok_or_else(|| DescriptorError::Malformed("missing 'alpha'".into()))?;
                alpha_rule.validate(k_max)?;
                let alpha: Vec<f64> = (1..=k_max).map(|k| alpha_rule.value(k)).collect();
                if let Some(k) = alpha.iter().position(|&a| a == 0.0 || !a.is_finite()) {
                    return malformed(format!("alpha sample {} is zero or not finite", k + 1));
                }
                let rule = spec.lambda.as_ref().ok_or_else(|| DescriptorError::Malformed("missing 'lambda'".into()))?;
                let default_pos = if alpha[k_max - 1] > 0.0 { Position::Last } else { Position::First };
                let (lambda, entries, pos) = sample_weights(rule, spec.n, k_max, Some(&alpha), default_pos, "lambda")?;
                (Samples::Generic { alpha, lambda }, entries, pos)
            }
            Family::Intermediate => {
                if spec.alpha.is_some() || spec.lambda.is_some() {
                    return malformed("intermediate descriptors take 'mu' and 'r' only");
                }
                let r_rule = spec.r.as_ref().ok_or_else(|| DescriptorError::Malformed("missing 'r'".into()))?;
                r_rule.validate(k_max)?;
                let r: Vec<f64> = (1..=k_max).map(|k| r_rule.value(k)).collect();
                if let Some(k) = r.iter().position(|&v| !(v > 0.0 && v.is_finite())) {
                    return malformed(format!("r sample {} is not positive", k + 1));
                }
                let rule = spec.mu.as_ref().ok_or_else(|| DescriptorError::Malformed("missing 'mu'".into()))?;
                let (mu, entries, pos) = sample_weights(rule, spec.n - 1, k_max, None, Position::Last, "mu")?;
                (Samples::Intermediate { r, mu }, entries, pos)
            }
            Family::Character => {
                if spec.alpha.is_some() || spec.mu.is_some() || spec.r.is_some() {
                    return malformed("character descriptors take 'lambda' only");
                }
                let rule = spec.lambda.as_ref().ok_or_else(|| DescriptorError::Malformed("missing 'lambda'".into()))?;
                let (lambda, entries, pos) = sample_weights(rule, spec.n, k_max, None, Position::Last, "lambda")?;
                (Samples::Character { lambda }, entries, pos)
            }
        };
        Ok(Self { spec, samples, entries, position })
    }

    pub fn spec(&self) -> &DescriptorSpec {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.spec.n
    }

    pub fn family(&self) -> Family {
        self.spec.family
    }

    pub fn len(&self) -> usize {
        self.spec.k
    }

    pub fn is_empty(&self) -> bool {
        self.spec.k == 0
    }

    /// Position of the varying weight entry.
    pub fn position(&self) -> Position {
        self.position
    }

    /// Sample `k` (1-based).
    pub fn sample(&self, k: usize) -> Result<SampleParam<'_>, DescriptorError> {
        if k == 0 || k > self.len() {
            return Err(DescriptorError::IndexOutOfRange { k, len: self.len() });
        }
        let i = k - 1;
        Ok(match &self.samples {
            Samples::Generic { alpha, lambda } => SampleParam::Generic { lambda: &lambda[i], alpha: alpha[i] },
            Samples::Intermediate { r, mu } => SampleParam::Intermediate { mu: &mu[i], r: r[i] },
            Samples::Character { lambda } => SampleParam::Character { lambda: &lambda[i] },
        })
    }

    /// The indices `k` of the final `⌈K/4⌉` samples, where "for k large
    /// enough" is checked.
    pub fn tail_window(&self) -> std::ops::RangeInclusive<usize> {
        let k = self.len();
        let w = k.div_ceil(4);
        (k - w + 1)..=k
    }

    pub(crate) fn weights(&self) -> &[DominantWeight] {
        match &self.samples {
            Samples::Generic { lambda, .. } | Samples::Character { lambda } => lambda,
            Samples::Intermediate { mu, .. } => mu,
        }
    }

    /// `α_k` (generic) or `r_k` (intermediate).
    pub(crate) fn scalars(&self) -> Option<&[f64]> {
        match &self.samples {
            Samples::Generic { alpha, .. } => Some(alpha),
            Samples::Intermediate { r, .. } => Some(r),
            Samples::Character { .. } => None,
        }
    }

    fn scalar_rule(&self) -> Option<&ScalarRule> {
        match self.spec.family {
            Family::Generic => self.spec.alpha.as_ref(),
            Family::Intermediate => self.spec.r.as_ref(),
            Family::Character => None,
        }
    }

    /// Tolerance for comparing a computed limit with `target`.
    pub fn limit_tol(&self, limit: &Limit, target: f64) -> f64 {
        match (limit, self.spec.explicit_tol) {
            (Limit::Numeric(_), Some(t)) => t,
            _ => 1e-6 * (1.0 + target.abs()),
        }
    }

    /// `lim α_k` (generic) or `lim r_k` (intermediate).
    pub fn scalar_limit(&self) -> Limit {
        let Some(samples) = self.scalars() else { return Limit::Undetermined };
        match self.scalar_rule().and_then(ScalarRule::analytic_limit) {
            Some(v) => Limit::Finite(v),
            None => self.numeric_limit(samples),
        }
    }

    /// `lim α_k · (s·λ_idx^k + t)`, generic family.
    pub fn product_limit(&self, idx: usize, s: f64, t: f64) -> Limit {
        let Samples::Generic { alpha, lambda } = &self.samples else { return Limit::Undetermined };
        let rule = self.spec.alpha.as_ref().expect("generic descriptors carry alpha");
        let numeric = || {
            let p: Vec<f64> = alpha.iter().zip(lambda).map(|(a, l)| a * (s * l.entries()[idx] as f64 + t)).collect();
            self.numeric_limit(&p)
        };
        let Some(a_inf) = rule.analytic_limit() else { return numeric() };
        match self.entries[idx] {
            EntryModel::Constant(v) => Limit::Finite(a_inf * (s * v as f64 + t)),
            EntryModel::Affine { a, b: 0 } => Limit::Finite(a_inf * (s * a as f64 + t)),
            EntryModel::Affine { b, .. } => {
                if a_inf != 0.0 {
                    return Limit::infinite(a_inf * s * b as f64);
                }
                match rule.limit_times_k() {
                    Some(Limit::Finite(ak)) => Limit::Finite(s * b as f64 * ak),
                    Some(Limit::PosInf) => Limit::infinite(s * b as f64),
                    Some(Limit::NegInf) => Limit::infinite(-s * b as f64),
                    _ => numeric(),
                }
            }
            EntryModel::Linked { c } => {
                if a_inf == 0.0 {
                    // |α_k·round(c/α_k) − c| ≤ |α_k|/2
                    Limit::Finite(s * c)
                } else {
                    Limit::Finite(a_inf * (s * (c / a_inf).round() + t))
                }
            }
            EntryModel::Sampled => numeric(),
        }
    }

    /// Limit read off the tail window: the last sample, provided the whole
    /// window stays within tolerance of it.
    fn numeric_limit(&self, samples: &[f64]) -> Limit {
        let last = *samples.last().expect("K > 0");
        let tol = self.spec.explicit_tol.unwrap_or(1e-6 * (1.0 + last.abs()));
        let window = self.tail_window();
        let stable = samples[window.start() - 1..].iter().all(|v| (v - last).abs() <= tol);
        if stable {
            Limit::Numeric(last)
        } else {
            Limit::Undetermined
        }
    }
}

/// Limit of a real sequence as far as it can be decided.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Limit {
    /// Known analytically from the generating rule.
    Finite(f64),
    /// Read off the tail window of sampled values.
    Numeric(f64),
    PosInf,
    NegInf,
    Undetermined,
}

impl Limit {
    fn infinite(sign: f64) -> Self {
        if sign > 0.0 {
            Limit::PosInf
        } else if sign < 0.0 {
            Limit::NegInf
        } else {
            Limit::Finite(0.0)
        }
    }

    pub fn value(&self) -> Option<f64> {
        match self {
            Limit::Finite(v) | Limit::Numeric(v) => Some(*v),
            _ => None,
        }
    }
}

fn sample_weights(
    rule: &WeightRule,
    len: usize,
    k_max: usize,
    alpha: Option<&[f64]>,
    default_pos: Position,
    name: &str,
) -> Result<(Vec<DominantWeight>, Vec<EntryModel>, Position), DescriptorError> {
    let check = |k: usize, v: Vec<i64>| -> Result<DominantWeight, DescriptorError> {
        if v.len() != len {
            return malformed(format!("{name} sample {k} has {} entries, expected {len}", v.len()));
        }
        DominantWeight::new(v).map_err(|_| DescriptorError::Malformed(format!("{name} sample {k} is not nonincreasing")))
    };
    if let Some(list) = &rule.list {
        if !rule.head.is_empty() || rule.tail.is_some() || rule.position.is_some() {
            return malformed(format!("{name}: 'list' excludes 'head', 'tail' and 'position'"));
        }
        if list.len() < k_max {
            return malformed(format!("{name} list has {} samples, K = {k_max}", list.len()));
        }
        let samples = (0..k_max).map(|i| check(i + 1, list[i].clone())).collect::<Result<Vec<_>, _>>()?;
        return Ok((samples, vec![EntryModel::Sampled; len], default_pos));
    }
    let Some(tail) = &rule.tail else {
        if rule.position.is_some() {
            return malformed(format!("{name}: 'position' needs a 'tail'"));
        }
        let w = check(1, rule.head.clone())?;
        let entries = w.entries().iter().map(|&v| EntryModel::Constant(v)).collect();
        return Ok((vec![w; k_max], entries, default_pos));
    };
    if rule.head.len() + 1 != len {
        return malformed(format!("{name}: head has {} entries, expected {}", rule.head.len(), len.saturating_sub(1)));
    }
    let pos = rule.position.unwrap_or(default_pos);
    let model = match tail {
        TailRule::Explicit { values } => {
            if values.len() < k_max {
                return malformed(format!("{name} tail list has {} values, K = {k_max}", values.len()));
            }
            EntryModel::Sampled
        }
        TailRule::Constant { value } => EntryModel::Constant(*value),
        TailRule::Affine { a, b } => EntryModel::Affine { a: *a, b: *b },
        TailRule::Linked { c } => {
            if alpha.is_none() {
                return malformed(format!("{name}: linked tail needs an alpha sequence"));
            }
            if !c.is_finite() {
                return malformed("linked rule needs finite c");
            }
            EntryModel::Linked { c: *c }
        }
    };
    let mut samples = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        let t = match tail {
            TailRule::Explicit { values } => values[k - 1],
            TailRule::Constant { value } => *value,
            TailRule::Affine { a, b } => a + b * k as i64,
            TailRule::Linked { c } => {
                let v = (c / alpha.expect("checked above")[k - 1]).round();
                if !(v.abs() < 1e15) {
                    return malformed(format!("{name} linked tail overflows at sample {k}"));
                }
                v as i64
            }
        };
        let mut v = Vec::with_capacity(len);
        if pos == Position::First {
            v.push(t);
            v.extend_from_slice(&rule.head);
        } else {
            v.extend_from_slice(&rule.head);
            v.push(t);
        }
        samples.push(check(k, v)?);
    }
    let mut entries: Vec<EntryModel> = rule.head.iter().map(|&v| EntryModel::Constant(v)).collect();
    if pos == Position::First {
        entries.insert(0, model);
    } else {
        entries.push(model);
    }
    Ok((samples, entries, pos))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Result<SequenceDescriptor, DescriptorError> {
        let spec: DescriptorSpec = serde_json::from_str(s).map_err(|e| DescriptorError::Malformed(e.to_string()))?;
        SequenceDescriptor::from_spec(spec)
    }

    #[test]
    fn samples_linked_tail() {
        let d = parse(r#"{"n":2,"alpha":{"rule":"harmonic","c":0.5},"lambda":{"head":[0],"tail":{"rule":"linked","c":-0.5}},"K":10000}"#)
            .unwrap();
        assert_eq!(d.sample(4).unwrap(), SampleParam::Generic { lambda: &DominantWeight::new(vec![0, -4]).unwrap(), alpha: 0.125 });
        assert_eq!(d.scalar_limit(), Limit::Finite(0.0));
        assert_eq!(d.product_limit(1, 1.0, 0.0), Limit::Finite(-0.5));
        assert_eq!(d.product_limit(0, 1.0, 0.0), Limit::Finite(0.0));
        assert_eq!(d.tail_window(), 7501..=10000);
    }

    #[test]
    fn affine_tail_products() {
        let base = |alpha: &str| {
            parse(&format!(r#"{{"n":2,"alpha":{alpha},"lambda":{{"head":[1],"tail":{{"rule":"affine","a":0,"b":-1}}}},"K":100}}"#))
                .unwrap()
        };
        assert_eq!(base(r#"{"rule":"power","c":1,"p":2}"#).product_limit(1, 1.0, 0.0), Limit::Finite(0.0));
        assert_eq!(base(r#"{"rule":"harmonic","c":0.5}"#).product_limit(1, 1.0, 0.0), Limit::Finite(-0.5));
        assert_eq!(base(r#"{"rule":"power","c":1,"p":0.5}"#).product_limit(1, 1.0, 0.0), Limit::NegInf);
        assert_eq!(base(r#"{"rule":"geometric","c":1,"q":0.5}"#).product_limit(1, -1.0, 3.0), Limit::Finite(0.0));
        assert_eq!(base(r#"{"rule":"constant","value":0.25}"#).product_limit(1, 1.0, 0.0), Limit::NegInf);
    }

    #[test]
    fn explicit_lists_use_numeric_limits() {
        let d = parse(r#"{"n":1,"alpha":{"rule":"explicit","values":[0.5,0.25,0.2,0.2,0.2,0.2,0.2,0.2]},"lambda":{"head":[3]},"K":8}"#).unwrap();
        assert_eq!(d.sample(2).unwrap(), SampleParam::Generic { lambda: &DominantWeight::new(vec![3]).unwrap(), alpha: 0.25 });
        assert_eq!(d.scalar_limit(), Limit::Numeric(0.2));
        let d = parse(r#"{"n":1,"alpha":{"rule":"explicit","values":[0.5,0.25,0.2,0.2,0.2,0.2,0.2,0.1]},"lambda":{"head":[3]},"K":8}"#).unwrap();
        assert_eq!(d.scalar_limit(), Limit::Undetermined);
    }

    #[test]
    fn first_position_default_for_negative_alpha() {
        let d = parse(r#"{"n":2,"alpha":{"rule":"harmonic","c":-0.5},"lambda":{"head":[0],"tail":{"rule":"linked","c":-0.5}},"K":10}"#)
            .unwrap();
        assert_eq!(d.position(), Position::First);
        assert_eq!(d.sample(3).unwrap(), SampleParam::Generic { lambda: &DominantWeight::new(vec![3, 0]).unwrap(), alpha: -0.5 / 3.0 });
    }

    #[test]
    fn rejects_malformed() {
        // not dominant at k = 1: (0, 1)
        assert!(parse(r#"{"n":2,"alpha":{"rule":"constant","value":1},"lambda":{"head":[0],"tail":{"rule":"affine","a":0,"b":1}},"K":5}"#).is_err());
        assert!(parse(r#"{"n":2,"alpha":{"rule":"constant","value":0},"lambda":{"head":[0,0]},"K":5}"#).is_err());
        assert!(parse(r#"{"n":2,"alpha":{"rule":"geometric","c":1,"q":1.5},"lambda":{"head":[0,0]},"K":5}"#).is_err());
        assert!(parse(r#"{"n":2,"lambda":{"head":[0,0]},"K":5}"#).is_err());
        assert!(parse(r#"{"n":2,"alpha":{"rule":"constant","value":1},"lambda":{"head":[0,0]},"K":0}"#).is_err());
        assert!(parse(r#"{"n":2,"alpha":{"rule":"explicit","values":[1]},"lambda":{"head":[0,0]},"K":2}"#).is_err());
        assert!(parse(r#"{"family":"intermediate","n":2,"r":{"rule":"constant","value":-1},"mu":{"head":[0]},"K":2}"#).is_err());
        assert!(parse(r#"{"family":"character","n":2,"lambda":{"head":[0,0]},"bogus":1,"K":2}"#).is_err());
    }

    #[test]
    fn intermediate_and_character_families() {
        let d = parse(r#"{"family":"intermediate","n":2,"r":{"rule":"harmonic","c":1,"offset":1},"mu":{"head":[0]},"K":20}"#).unwrap();
        assert_eq!(d.scalar_limit(), Limit::Finite(1.0));
        assert_eq!(d.sample(1).unwrap(), SampleParam::Intermediate { mu: &DominantWeight::new(vec![0]).unwrap(), r: 2.0 });
        let d = parse(r#"{"family":"character","n":2,"lambda":{"list":[[1,0],[1,0]]},"K":2}"#).unwrap();
        assert_eq!(d.scalar_limit(), Limit::Undetermined);
        assert_eq!(d.sample(2).unwrap(), SampleParam::Character { lambda: &DominantWeight::new(vec![1, 0]).unwrap() });
    }

    #[test]
    fn spec_roundtrips_through_json() {
        let s = r#"{"family":"generic","n":2,"alpha":{"rule":"harmonic","c":0.5,"offset":0.0},"lambda":{"head":[0],"tail":{"rule":"linked","c":-0.5}},"K":10000}"#;
        let spec: DescriptorSpec = serde_json::from_str(s).unwrap();
        assert_eq!(serde_json::to_string(&spec).unwrap(), s);
    }
}
