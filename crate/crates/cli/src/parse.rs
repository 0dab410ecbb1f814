//! Command-line value syntax: comma-separated integers for weights, `a+bi`
//! for complex scalars.

use anyhow::{anyhow, bail, Context, Result};
use orbitc_core::matrix::CVector;
use orbitc_core::weights::DominantWeight;
use orbitc_core::Complex64;

pub fn ints(s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|p| p.trim().parse::<i64>().with_context(|| format!("bad integer '{p}'"))).collect()
}

pub fn floats(s: &str) -> Result<Vec<f64>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            let v = p.trim().parse::<f64>().with_context(|| format!("bad number '{p}'"))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(anyhow!("non-finite number '{p}'"))
            }
        })
        .collect()
}

pub fn weight(s: &str) -> Result<DominantWeight> {
    DominantWeight::new(ints(s)?).map_err(|e| anyhow!("{e}: '{s}'"))
}

/// `"1.5"`, `"-2i"`, `"0.5-1e-3i"`, `"i"`.
pub fn complex(s: &str) -> Result<Complex64> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        bail!("empty complex number");
    }
    let Some(body) = t.strip_suffix('i') else {
        return Ok(Complex64::new(t.parse().with_context(|| format!("bad complex number '{s}'"))?, 0.0));
    };
    // the imaginary part starts at the last sign not opening an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len()).rev().find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1",
        "-" => "-1",
        other => other,
    };
    let re: f64 = re.parse().with_context(|| format!("bad complex number '{s}'"))?;
    let im: f64 = im.parse().with_context(|| format!("bad complex number '{s}'"))?;
    if !(re.is_finite() && im.is_finite()) {
        bail!("non-finite complex number '{s}'");
    }
    Ok(Complex64::new(re, im))
}

pub fn complex_vector(s: &str) -> Result<CVector> {
    let parts: Vec<Complex64> = s.split(',').map(complex).collect::<Result<_>>()?;
    Ok(CVector::from_vec(parts))
}
