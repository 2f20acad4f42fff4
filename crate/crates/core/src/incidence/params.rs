use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{DesignError, IncidenceStructure};

/// Parameters of a 2-(v, k, λ) design with b blocks and replication number r.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignParameters {
    pub v: u64,
    pub b: u64,
    pub r: u64,
    pub k: u64,
    pub lambda: u64,
    pub symmetric: bool,
}

impl DesignParameters {
    /// Counting identities and inequalities every nontrivial 2-design satisfies.
    pub fn identity_violations(&self) -> Vec<&'static str> {
        let DesignParameters { v, b, r, k, lambda, symmetric } = *self;
        let mut out = Vec::new();
        if v * r != b * k {
            out.push("vr = bk");
        }
        if lambda * (v - 1) != r * (k - 1) {
            out.push("lambda(v-1) = r(k-1)");
        }
        if b < v || r < k {
            out.push("b >= v and r >= k");
        }
        if lambda >= r {
            out.push("lambda < r");
        }
        if symmetric != (b == v) {
            out.push("symmetric iff b = v");
        }
        out
    }
}

/// Checks that `s` is a nontrivial 2-design and returns its parameters.
pub fn verify_design(s: &IncidenceStructure) -> Result<DesignParameters, DesignError> {
    let v = s.v();
    if v < 3 {
        return Err(DesignError::TooFewPoints(v));
    }
    let blocks = s.blocks();
    let k = blocks.first().ok_or(DesignError::NoBlocks)?.len();
    if let Some(b) = blocks.iter().find(|b| b.len() != k) {
        return Err(DesignError::NonConstantBlockSize { first: k, other: b.len() });
    }
    if k == 1 {
        return Err(DesignError::BlockSizeOne);
    }
    if k == v {
        return Err(DesignError::TrivialDesign);
    }

    let mut pair = vec![0usize; v * v];
    let mut replication = vec![0usize; v];
    for block in blocks {
        for (i, &x) in block.iter().enumerate() {
            replication[x] += 1;
            for &y in &block[i + 1..] {
                pair[x * v + y] += 1;
            }
        }
    }
    let lambda = pair[1];
    for x in 0..v {
        for y in x + 1..v {
            let c = pair[x * v + y];
            if c == 0 {
                return Err(DesignError::UncoveredPair(x, y));
            }
            if c != lambda {
                return Err(DesignError::NonConstantLambda {
                    first: (0, 1),
                    first_count: lambda,
                    other: (x, y),
                    other_count: c,
                });
            }
        }
    }
    let r = replication[0];
    if replication.iter().any(|&x| x != r) {
        return Err(DesignError::Inconsistent("replication number varies in a 2-design".into()));
    }
    let params = DesignParameters {
        v: v as u64,
        b: blocks.len() as u64,
        r: r as u64,
        k: k as u64,
        lambda: lambda as u64,
        symmetric: blocks.len() == v,
    };
    let violations = params.identity_violations();
    if !violations.is_empty() {
        return Err(DesignError::Inconsistent(violations.join(", ")));
    }
    Ok(params)
}

/// Largest `t` for which `s` is a t-design, with `lambdas[s-1] = λ_s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TDesignStrength {
    pub t_max: usize,
    pub lambdas: Vec<u64>,
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

fn for_each_subset(items: &[usize], t: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(items: &[usize], t: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == t {
            f(cur);
            return;
        }
        let need = t - cur.len();
        for i in start..=items.len() - need {
            cur.push(items[i]);
            rec(items, t, i + 1, cur, f);
            cur.pop();
        }
    }
    if t <= items.len() {
        rec(items, t, 0, &mut Vec::with_capacity(t), f);
    }
}

/// Constant count of blocks through every t-subset, if there is one.
fn constant_lambda(s: &IncidenceStructure, t: usize) -> Option<u64> {
    let mut counts: HashMap<Vec<usize>, u64> = HashMap::new();
    for block in s.blocks() {
        for_each_subset(block, t, &mut |sub| *counts.entry(sub.to_vec()).or_insert(0) += 1);
    }
    if counts.len() as u128 != binomial(s.v() as u64, t as u64) {
        return None;
    }
    let first = *counts.values().next()?;
    counts.values().all(|&c| c == first).then_some(first)
}

/// Computes the t-design strength by counting blocks through every t-subset
/// for t = 1, 2, ... until the count stops being constant.
pub fn t_design_strength(s: &IncidenceStructure) -> Result<TDesignStrength, DesignError> {
    let k = s.blocks().first().ok_or(DesignError::NoBlocks)?.len();
    if s.blocks().iter().any(|b| b.len() != k) {
        return Err(DesignError::NotOneDesign);
    }
    let mut lambdas = Vec::new();
    for t in 1..=k {
        match constant_lambda(s, t) {
            Some(l) => lambdas.push(l),
            None => break,
        }
    }
    if lambdas.is_empty() {
        return Err(DesignError::NotOneDesign);
    }
    let t = lambdas.len() as u64;
    let (v, k) = (s.v() as u64, k as u64);
    let lambda_t = lambdas[lambdas.len() - 1] as u128;
    for s_ in 1..t {
        // λ_s · C(k-s, t-s) = λ_t · C(v-s, t-s)
        let lhs = lambdas[s_ as usize - 1] as u128 * binomial(k - s_, t - s_);
        let rhs = lambda_t * binomial(v - s_, t - s_);
        if lhs != rhs {
            return Err(DesignError::Inconsistent(format!("lambda_{s_} does not match lambda_{t}")));
        }
    }
    Ok(TDesignStrength { t_max: lambdas.len(), lambdas })
}
