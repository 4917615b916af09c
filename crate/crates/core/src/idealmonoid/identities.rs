//! Product identities between ideals, checked by reduced Gröbner bases and
//! recorded as transcripts that can be re-verified from the JSON alone.

use serde::Serialize;
use serde_json::{json, Value};

use super::families::IdealFamily;
use crate::polyarith::Ideal;
use crate::{Error, Result};

/// Outcome of checking `f1 * ... * fn = rhs`.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityRecord {
    pub label: String,
    pub lhs: Vec<String>,
    pub rhs: String,
    /// Whether the identity is supposed to hold; negative controls expect
    /// `false`.
    pub expected: bool,
    pub holds: bool,
    pub product_gb_hash: String,
    pub rhs_gb_hash: String,
    pub transcript: Value,
}

impl IdentityRecord {
    pub fn passed(&self) -> bool {
        self.holds == self.expected
    }
}

/// Checks whether the product of `factors` equals `rhs`.
pub fn verify_product(
    label: &str,
    factors: &[(String, Ideal)],
    rhs: &(String, Ideal),
    expected: bool,
) -> Result<IdentityRecord> {
    let product = Ideal::product_all(factors.iter().map(|(_, i)| i))
        .ok_or_else(|| Error::InvalidArgument("empty product".into()))?;
    let holds = product.same_ideal(&rhs.1)?;
    let transcript = json!({
        "factors": factors.iter().map(|(n, i)| json!({"name": n, "ideal": i.generators_json()})).collect::<Vec<_>>(),
        "rhs": {"name": rhs.0, "ideal": rhs.1.generators_json()},
        "product_gb": product.gb_json()?,
        "rhs_gb": rhs.1.gb_json()?,
    });
    Ok(IdentityRecord {
        label: label.to_string(),
        lhs: factors.iter().map(|(n, _)| n.clone()).collect(),
        rhs: rhs.0.clone(),
        expected,
        holds,
        product_gb_hash: product.gb_hash()?,
        rhs_gb_hash: rhs.1.gb_hash()?,
        transcript,
    })
}

/// Checks `lhs[0] * lhs[1] * ... = rhs` for family members in `K[X1, X2]`.
pub fn verify_family_identity(
    lhs: &[IdealFamily],
    rhs: IdealFamily,
    expected: bool,
) -> Result<IdentityRecord> {
    let factors = lhs
        .iter()
        .map(|f| Ok((f.to_string(), f.expand(2)?)))
        .collect::<Result<Vec<_>>>()?;
    let names: Vec<String> = lhs.iter().map(|f| f.to_string()).collect();
    let label = format!("{} = {rhs}", names.join(" * "));
    verify_product(
        &label,
        &factors,
        &(rhs.to_string(), rhs.expand(2)?),
        expected,
    )
}

/// Re-derives an identity verdict from a transcript: recomputes the product
/// of the listed factors and both reduced bases, and compares them with the
/// recorded ones.
pub fn recheck_identity(transcript: &Value) -> Result<bool> {
    let bad = || Error::Parse("malformed identity transcript".into());
    let factors = transcript["factors"]
        .as_array()
        .ok_or_else(bad)?
        .iter()
        .map(|f| Ideal::from_generators_json(&f["ideal"]))
        .collect::<Result<Vec<_>>>()?;
    let rhs = Ideal::from_generators_json(&transcript["rhs"]["ideal"])?;
    let product = Ideal::product_all(factors.iter()).ok_or_else(bad)?;
    let product_gb_matches = product.gb_json()? == transcript["product_gb"];
    let rhs_gb_matches = rhs.gb_json()? == transcript["rhs_gb"];
    if !product_gb_matches || !rhs_gb_matches {
        return Err(Error::VerificationFailed(
            "recorded Gröbner bases do not match recomputation".into(),
        ));
    }
    product.same_ideal(&rhs)
}

/// The standard identity suite on the grid `1..=max`:
///
/// * `a[1]^k = a[k]`;
/// * `a[k] b[l] = a[k+l]`, expected exactly when `k >= l - 1` (the other
///   grid points are negative controls);
/// * `a[1] c[2k+1] = a[2k+2]` and `a[1] c[2k] = a[2k+1]`;
/// * `a[1] b[2] = a[2]` as an explicit negative control;
/// * `b[2] cprime = a[5]` and the factorization of `c[4]`.
pub fn identity_suite(max: u32) -> Result<Vec<IdentityRecord>> {
    use IdealFamily::*;
    let mut out = Vec::new();
    for k in 1..=max {
        out.push(verify_family_identity(&vec![A(1); k as usize], A(k), true)?);
    }
    for k in 1..=max {
        for l in 1..=max {
            out.push(verify_family_identity(&[A(k), B(l)], A(k + l), k + 1 >= l)?);
        }
    }
    for k in 1..=max {
        out.push(verify_family_identity(
            &[A(1), C(2 * k + 1)],
            A(2 * k + 2),
            true,
        )?);
        out.push(verify_family_identity(
            &[A(1), C(2 * k)],
            A(2 * k + 1),
            true,
        )?);
    }
    out.push(verify_family_identity(&[A(1), B(2)], A(2), false)?);
    out.push(verify_family_identity(&[B(2), CPrime], A(5), true)?);
    out.push(c4_factorization()?);
    Ok(out)
}

/// `c[4] = <X1^2, X1 X2 + X2^2> <X1^2, X1 X2 - X2^2>`.
pub fn c4_factorization() -> Result<IdentityRecord> {
    let f = Ideal::parse("<X1^2; X1*X2 + X2^2>")?;
    let g = Ideal::parse("<X1^2; X1*X2 - X2^2>")?;
    verify_product(
        "c[4] factorization",
        &[(f.to_string(), f), (g.to_string(), g)],
        &("c[4]".into(), IdealFamily::C(4).expand(2)?),
        true,
    )
}
