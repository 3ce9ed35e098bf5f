//! Verification reports: every identity is checked exactly and each
//! sub-check records its residual when it fails.

use serde::Serialize;
use serde_json::Value;

use crate::algebra::RationalFunction;
use crate::error::{Error, Result};
use crate::json::{rf_to_json, witness_to_json};
use crate::mould::Mould;
use crate::solutions::{
    d_ab_with, d_sum_with, luma_with, psi_minus1_mould, psi_odd_mould, sigma_c, splittings, xi,
    COMPARISON_DEPTH,
};
use crate::special::{dupal, pal, paj, sa, sang_expanded, Singulator};
use crate::symmetry::{alternality_witness, symmetrality_witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub claim: String,
    pub depth: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<Value>,
    #[serde(skip)]
    residual_text: Option<String>,
}

impl Check {
    pub fn pass(claim: impl Into<String>, depth: usize) -> Self {
        Check {
            claim: claim.into(),
            depth,
            status: Status::Pass,
            residual: None,
            residual_text: None,
        }
    }

    pub fn fail(claim: impl Into<String>, depth: usize, residual: Value, text: String) -> Self {
        Check {
            claim: claim.into(),
            depth,
            status: Status::Fail,
            residual: Some(residual),
            residual_text: Some(text),
        }
    }

    /// Passes iff `residual` is zero.
    pub fn zero(claim: impl Into<String>, depth: usize, residual: &RationalFunction) -> Self {
        if residual.is_zero() {
            Check::pass(claim, depth)
        } else {
            Check::fail(claim, depth, rf_to_json(residual), residual.render("x"))
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Plain rendering of the residual, if any.
    pub fn residual_text(&self) -> Option<&str> {
        self.residual_text.as_deref()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub claim: String,
    pub status: Status,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(claim: impl Into<String>, checks: Vec<Check>) -> Self {
        let status = if checks.iter().all(Check::passed) {
            Status::Pass
        } else {
            Status::Fail
        };
        Report {
            claim: claim.into(),
            status,
            checks,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed())
    }

    /// The report itself, or `VerificationFailed` for its first failing check.
    pub fn into_result(self) -> Result<Report> {
        match self.first_failure() {
            None => Ok(self),
            Some(c) => Err(Error::VerificationFailed {
                claim: c.claim.clone(),
                depth: c.depth,
                residual: c.residual_text.clone().unwrap_or_default(),
            }),
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("reports serialize")
    }
}

/// Componentwise `lhs - rhs = 0` for depths `from..=to`.
fn componentwise(claim: &str, lhs: &Mould, rhs: &Mould, from: usize, to: usize) -> Vec<Check> {
    (from..=to)
        .map(|d| Check::zero(claim, d, &lhs.component(d).sub(rhs.component(d))))
        .collect()
}

/// `sharp(psi) = sang(sa_{2n+1})` for depths `1..=dmax`, with `psi` given in
/// `x`-coordinates.
pub fn psi_odd_with(n: usize, dmax: usize, psi: &Mould) -> Result<Report> {
    let sang = Singulator::new(dmax)?.sang(&sa(2 * n as i64 + 1, dmax))?;
    let lhs = psi.with_depth(dmax).sharp()?;
    let claim = format!("sharp(psi_{}) = sang(sa_{})", 2 * n + 1, 2 * n + 1);
    Ok(Report::new(claim.clone(), componentwise(&claim, &lhs, &sang, 1, dmax)))
}

pub fn psi_odd(n: usize, dmax: usize) -> Result<Report> {
    psi_odd_with(n, dmax, &psi_odd_mould(n, dmax))
}

/// `sharp(psi)^{(d)} = mu_log(paj)^{(d)} / (x_1 + ... + x_d)` for `d <= dmax`.
pub fn psi_minus1_with(dmax: usize, psi: &Mould) -> Result<Report> {
    let rhs = paj(dmax).mu_log()?.dur_unscale()?;
    let lhs = psi.with_depth(dmax).sharp()?;
    let claim = "sharp(psi_-1) = log(paj) / (x_1 + ... + x_d)";
    Ok(Report::new(claim, componentwise(claim, &lhs, &rhs, 1, dmax)))
}

pub fn psi_minus1(dmax: usize) -> Result<Report> {
    psi_minus1_with(dmax, &psi_minus1_mould(dmax))
}

/// The depth-3 comparison for a given `sigma^c`:
/// `xi = slang_1(sa_{2n+1})`, `luma = sigma^c` in depths 1 and 2,
/// `sigma^c - luma = sum c_{a,b}/(24b) D_{a,b}`, and each `D_{a,b}^{(3)}`
/// is a polynomial. All modulo depth 4.
pub fn comparison_with(n: usize, sigma: &Mould) -> Result<Report> {
    let top = COMPARISON_DEPTH;
    let sg: Singulator = Singulator::new(top)?;
    let odd = 2 * n + 1;
    let mut checks = componentwise(
        &format!("xi_{} = slang_1(sa_{}) mod depth 4", odd, odd),
        &xi(n)?,
        &sg.slang(1, &sa(odd as i64, top))?,
        1,
        top,
    );
    let luma = luma_with(&sg, n)?;
    checks.extend(componentwise(&format!("luma_{} = sigma^c_{}", odd, odd), &luma, sigma, 1, 2));
    checks.extend(componentwise(
        &format!("sigma^c_{} - luma_{} = weighted sum of D_(a,b) mod depth 4", odd, odd),
        &sigma.with_depth(top).sub(&luma),
        &d_sum_with(&sg, n)?,
        1,
        top,
    ));
    for (a, b) in splittings(n) {
        let d3 = d_ab_with(&sg, a, b)?.component(3).clone();
        let claim = format!("D_({},{}) in depth 3 is a polynomial", a, b);
        checks.push(if d3.is_polynomial() {
            Check::pass(claim, 3)
        } else {
            Check::fail(claim, 3, rf_to_json(&d3), d3.render("x"))
        });
    }
    Ok(Report::new(format!("comparison of sigma^c_{} and luma_{}", odd, odd), checks))
}

pub fn comparison(n: usize) -> Result<Report> {
    comparison_with(n, &sigma_c(n)?)
}

pub fn pal_symmetral(depth: usize) -> Result<Report> {
    let claim = "pal is symmetral";
    let check = match symmetrality_witness(&pal(depth)?)? {
        None => Check::pass(claim, depth),
        Some(w) => Check::fail(claim, w.p + w.q, witness_to_json(&w), w.residual.render("x")),
    };
    Ok(Report::new(claim, vec![check]))
}

pub fn dupal_alternal(depth: usize) -> Result<Report> {
    let claim = "dupal is alternal";
    let check = match alternality_witness(&dupal(depth))? {
        None => Check::pass(claim, depth),
        Some(w) => Check::fail(claim, w.p + w.q, witness_to_json(&w), w.residual.render("x")),
    };
    Ok(Report::new(claim, vec![check]))
}

/// The compositional `sang` against the four-sum expansion on `sa_s`.
pub fn sang_expansion(s_values: &[i64], depth: usize) -> Result<Report> {
    let sg: Singulator = Singulator::new(depth)?;
    let mut checks = vec![];
    for &s in s_values {
        let a = sa(s, depth);
        let claim = format!("sang(sa_{}) = expanded sang(sa_{})", s, s);
        checks.extend(componentwise(&claim, &sg.sang(&a)?, &sang_expanded(&a)?, 1, depth));
    }
    Ok(Report::new("sang expansion", checks))
}

/// `sang(sa_s) = slang_1(sa_s) + ... + slang_depth(sa_s)`.
pub fn slang_sum(s_values: &[i64], depth: usize) -> Result<Report> {
    let sg: Singulator = Singulator::new(depth)?;
    let mut checks = vec![];
    for &s in s_values {
        let a = sa(s, depth);
        let total = sg
            .slang_all(&a)?
            .iter()
            .fold(Mould::zero(depth), |acc, p| acc.add(p));
        let claim = format!("sang(sa_{}) = sum of slang_r(sa_{})", s, s);
        checks.extend(componentwise(&claim, &sg.sang(&a)?, &total, 1, depth));
    }
    Ok(Report::new("sang = sum of slang_r", checks))
}
