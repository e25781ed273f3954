//! Canonical JSON encoding. Objects are key-sorted, rationals are decimal
//! strings and variable indices are 1-based.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use rescalc_core::{
    Component, Current, CurrentVector, DecompositionReport, ElementaryTerm, Factor, MonIdeal, MonModule, MonPrime,
    Monomial, Piece, PolyCoeff, VarSet, Verdict,
};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("malformed JSON: {0}")]
pub struct JsonError(pub String);

type JResult<T> = Result<T, JsonError>;

fn bad<T>(what: impl Into<String>) -> JResult<T> {
    Err(JsonError(what.into()))
}

fn varset_to_json(s: VarSet) -> Value {
    Value::from(s.iter().map(|i| i + 1).collect::<Vec<_>>())
}

fn varset_from_json(v: &Value, n: usize) -> JResult<VarSet> {
    let mut s = VarSet::EMPTY;
    for x in array(v)? {
        match x.as_u64().map(|i| i as usize) {
            Some(i) if (1..=n).contains(&i) => s = s.insert(i - 1),
            _ => return bad(format!("variable index {x}")),
        }
    }
    Ok(s)
}

fn array(v: &Value) -> JResult<&Vec<Value>> {
    v.as_array().ok_or_else(|| JsonError(format!("expected array, got {v}")))
}

fn field<'a>(v: &'a Value, key: &str) -> JResult<&'a Value> {
    v.get(key).ok_or_else(|| JsonError(format!("missing field '{key}'")))
}

fn usize_field(v: &Value, key: &str) -> JResult<usize> {
    field(v, key)?.as_u64().map(|x| x as usize).ok_or_else(|| JsonError(format!("field '{key}' is not an integer")))
}

fn monomial_to_json(m: &Monomial) -> Value {
    Value::from(m.exps().to_vec())
}

fn monomial_from_json(v: &Value, n: usize) -> JResult<Monomial> {
    let exps = array(v)?
        .iter()
        .map(|x| x.as_u64().and_then(|e| u32::try_from(e).ok()).ok_or_else(|| JsonError(format!("exponent {x}"))))
        .collect::<JResult<Vec<u32>>>()?;
    if exps.len() != n {
        return bad(format!("exponent vector of length {} in dimension {n}", exps.len()));
    }
    Ok(Monomial(exps))
}

fn bigint_from_str(v: &Value) -> JResult<BigInt> {
    v.as_str().and_then(|s| s.parse().ok()).ok_or_else(|| JsonError(format!("integer string {v}")))
}

pub fn current_to_json(t: &Current) -> Value {
    let terms: Vec<Value> = t
        .terms()
        .iter()
        .map(|term| {
            let coeff: Vec<Value> = term
                .coeff
                .pieces()
                .map(|(p, c)| {
                    json!({
                        "num": c.numer().to_string(),
                        "den": c.denom().to_string(),
                        "alpha": monomial_to_json(&p.alpha),
                        "beta": monomial_to_json(&p.beta),
                        "dz": varset_to_json(p.dz),
                        "dzb": varset_to_json(p.dzb),
                    })
                })
                .collect();
            let factors: Vec<Value> = term
                .factors
                .iter()
                .enumerate()
                .filter_map(|(i, f)| match f {
                    Factor::None => None,
                    Factor::Pv(a) => Some(json!({"var": i + 1, "kind": "pv", "exp": a})),
                    Factor::Res(a) => Some(json!({"var": i + 1, "kind": "res", "exp": a})),
                })
                .collect();
            json!({"coeff": coeff, "factors": factors})
        })
        .collect();
    json!({"n": t.n(), "terms": terms})
}

pub fn current_from_json(v: &Value) -> JResult<Current> {
    let n = usize_field(v, "n")?;
    if n == 0 || n > rescalc_core::MAX_VARS {
        return bad(format!("n = {n}"));
    }
    let mut raw = Vec::new();
    for term in array(field(v, "terms")?)? {
        let mut factors = vec![Factor::None; n];
        for f in array(field(term, "factors")?)? {
            let var = usize_field(f, "var")?;
            let exp = u32::try_from(usize_field(f, "exp")?).map_err(|_| JsonError("exponent".into()))?;
            if !(1..=n).contains(&var) {
                return bad(format!("factor variable {var}"));
            }
            factors[var - 1] = match field(f, "kind")?.as_str() {
                Some("pv") => Factor::Pv(exp),
                Some("res") => Factor::Res(exp),
                _ => return bad("factor kind"),
            };
        }
        let mut pieces = Vec::new();
        for p in array(field(term, "coeff")?)? {
            let num = bigint_from_str(field(p, "num")?)?;
            let den = bigint_from_str(field(p, "den")?)?;
            if den == BigInt::from(0) {
                return bad("zero denominator");
            }
            let piece = Piece {
                alpha: monomial_from_json(field(p, "alpha")?, n)?,
                beta: monomial_from_json(field(p, "beta")?, n)?,
                dz: varset_from_json(field(p, "dz")?, n)?,
                dzb: varset_from_json(field(p, "dzb")?, n)?,
            };
            pieces.push((piece, BigRational::new(num, den)));
        }
        raw.push(ElementaryTerm::new(factors, PolyCoeff::from_pieces(n, pieces)));
    }
    Current::normalize(n, raw).map_err(|e| JsonError(e.to_string()))
}

pub fn vector_to_json(t: &CurrentVector) -> Value {
    Value::from(t.components().iter().map(current_to_json).collect::<Vec<_>>())
}

pub fn vector_from_json(v: &Value) -> JResult<CurrentVector> {
    let comps = array(v)?.iter().map(current_from_json).collect::<JResult<Vec<_>>>()?;
    CurrentVector::new(comps).map_err(|e| JsonError(e.to_string()))
}

/// Minimal generators as exponent vectors, sorted ascending.
pub fn ideal_to_json(i: &MonIdeal) -> Value {
    let mut gens: Vec<Vec<u32>> = i.gens().iter().map(|m| m.exps().to_vec()).collect();
    gens.sort();
    Value::from(gens)
}

pub fn ideal_from_json(v: &Value, n: usize) -> JResult<MonIdeal> {
    let gens = array(v)?.iter().map(|m| monomial_from_json(m, n)).collect::<JResult<Vec<_>>>()?;
    MonIdeal::new(n, gens).map_err(|e| JsonError(e.to_string()))
}

pub fn module_to_json(m: &MonModule) -> Value {
    json!({
        "n": m.n(),
        "rank": m.rank(),
        "components": m.components().iter().map(ideal_to_json).collect::<Vec<_>>(),
    })
}

pub fn module_from_json(v: &Value) -> JResult<MonModule> {
    let n = usize_field(v, "n")?;
    let rank = usize_field(v, "rank")?;
    let comps = array(field(v, "components")?)?
        .iter()
        .map(|c| ideal_from_json(c, n))
        .collect::<JResult<Vec<_>>>()?;
    if comps.len() != rank {
        return bad("rank does not match component count");
    }
    MonModule::from_components(comps).map_err(|e| JsonError(e.to_string()))
}

pub fn prime_to_json(p: &MonPrime) -> Value {
    varset_to_json(p.vars)
}

fn prime_from_json(v: &Value, n: usize) -> JResult<MonPrime> {
    Ok(MonPrime::new(n, varset_from_json(v, n)?))
}

fn verdict_to_json(v: &Verdict) -> Value {
    json!({"passed": v.passed, "witness": v.witness})
}

fn verdict_from_json(v: &Value) -> JResult<Verdict> {
    let passed = field(v, "passed")?.as_bool().ok_or_else(|| JsonError("passed".into()))?;
    let witness = match v.get("witness") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(other) => return bad(format!("witness {other}")),
    };
    Ok(Verdict { passed, witness })
}

fn per_prime_to_json(m: &BTreeMap<MonPrime, Verdict>) -> Value {
    Value::from(
        m.iter()
            .map(|(p, v)| {
                let mut o = verdict_to_json(v);
                o["prime"] = prime_to_json(p);
                o
            })
            .collect::<Vec<_>>(),
    )
}

fn per_prime_from_json(v: &Value, n: usize) -> JResult<BTreeMap<MonPrime, Verdict>> {
    array(v)?.iter().map(|e| Ok((prime_from_json(field(e, "prime")?, n)?, verdict_from_json(e)?))).collect()
}

pub fn report_to_json(r: &DecompositionReport) -> Value {
    let components: Vec<Value> = r
        .components
        .iter()
        .map(|(p, c)| json!({"prime": prime_to_json(p), "rp": vector_to_json(&c.rp), "q": module_to_json(&c.q)}))
        .collect();
    let mut verdicts = Map::new();
    verdicts.insert("sum".into(), verdict_to_json(&r.sum_check));
    verdicts.insert("primary".into(), per_prime_to_json(&r.primary_checks));
    verdicts.insert("intersection".into(), verdict_to_json(&r.intersection_check));
    verdicts.insert("minimality".into(), verdict_to_json(&r.minimality_check));
    verdicts.insert("sep".into(), per_prime_to_json(&r.sep_checks));
    verdicts.insert("lemma_bell".into(), per_prime_to_json(&r.lemma_bell_checks));
    json!({
        "r": vector_to_json(&r.r),
        "j": module_to_json(&r.j),
        "components": components,
        "verdicts": Value::Object(verdicts),
        "all_passed": r.all_passed(),
    })
}

pub fn report_from_json(v: &Value) -> JResult<DecompositionReport> {
    let r = vector_from_json(field(v, "r")?)?;
    let j = module_from_json(field(v, "j")?)?;
    let n = j.n();
    let mut components = BTreeMap::new();
    for c in array(field(v, "components")?)? {
        let p = prime_from_json(field(c, "prime")?, n)?;
        let comp = Component { rp: vector_from_json(field(c, "rp")?)?, q: module_from_json(field(c, "q")?)? };
        components.insert(p, comp);
    }
    let verdicts = field(v, "verdicts")?;
    Ok(DecompositionReport {
        r,
        j,
        components,
        sum_check: verdict_from_json(field(verdicts, "sum")?)?,
        primary_checks: per_prime_from_json(field(verdicts, "primary")?, n)?,
        intersection_check: verdict_from_json(field(verdicts, "intersection")?)?,
        minimality_check: verdict_from_json(field(verdicts, "minimality")?)?,
        sep_checks: per_prime_from_json(field(verdicts, "sep")?, n)?,
        lemma_bell_checks: per_prime_from_json(field(verdicts, "lemma_bell")?, n)?,
    })
}

/// Pretty-printed with sorted keys and a trailing newline.
pub fn to_string_canonical(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}
