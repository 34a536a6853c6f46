use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, SVec};
use crate::scalars::FieldSpec;

/// A graded braided bialgebra known in degrees `0..=N`, given by its homogeneous
/// components `∇^{p,q}`, `Δ^{p,q}`, `c^{p,q}` for `p + q ≤ N`, a unit in `A⁰`
/// and a counit on `A⁰`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedBraidedBialgebra {
    field: FieldSpec,
    dims: Vec<usize>,
    mul: BTreeMap<(usize, usize), Matrix>,
    comul: BTreeMap<(usize, usize), Matrix>,
    braid: BTreeMap<(usize, usize), Matrix>,
    unit: SVec,
    counit: SVec,
}

/// One axiom in one total degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomEntry {
    pub axiom: String,
    pub degree: usize,
    pub instances: usize,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub entries: Vec<AxiomEntry>,
}

impl ValidationReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomEntry> {
        self.entries.iter().filter(|e| !e.holds)
    }

    fn record(&mut self, axiom: &str, degree: usize, instance: String, lhs: &Matrix, rhs: &Matrix) {
        let witness = lhs.first_difference(rhs).map(|j| format!("{instance}, basis vector {j}"));
        let idx = match self
            .entries
            .iter()
            .position(|e| e.axiom == axiom && e.degree == degree)
        {
            Some(i) => i,
            None => {
                self.entries.push(AxiomEntry {
                    axiom: axiom.to_string(),
                    degree,
                    instances: 0,
                    holds: true,
                    witness: None,
                });
                self.entries.len() - 1
            }
        };
        let e = &mut self.entries[idx];
        e.instances += 1;
        if let Some(w) = witness {
            if e.holds {
                e.holds = false;
                e.witness = Some(w);
            }
        }
    }
}

fn key(p: usize, q: usize) -> String {
    format!("{p},{q}")
}

impl TruncatedBraidedBialgebra {
    pub fn new(
        field: FieldSpec,
        dims: Vec<usize>,
        mul: BTreeMap<(usize, usize), Matrix>,
        comul: BTreeMap<(usize, usize), Matrix>,
        braid: BTreeMap<(usize, usize), Matrix>,
        unit: SVec,
        counit: SVec,
    ) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::Shape("a bialgebra needs at least its degree-0 component".into()));
        }
        let n = dims.len() - 1;
        for total in 0..=n {
            for p in 0..=total {
                let q = total - p;
                let (dp, dq, dt) = (dims[p], dims[q], dims[total]);
                let expect = |name: &str, map: &BTreeMap<(usize, usize), Matrix>, shape: (usize, usize)| {
                    match map.get(&(p, q)) {
                        None => Err(Error::Shape(format!("missing {name} component {}", key(p, q)))),
                        Some(m) if m.shape() != shape => Err(Error::Shape(format!(
                            "{name} component {} is {}x{}, expected {}x{}",
                            key(p, q),
                            m.nrows(),
                            m.ncols(),
                            shape.0,
                            shape.1
                        ))),
                        Some(m) if m.field() != field => Err(Error::FieldMismatch {
                            left: field.to_string(),
                            right: m.field().to_string(),
                        }),
                        Some(_) => Ok(()),
                    }
                };
                expect("mul", &mul, (dt, dp * dq))?;
                expect("comul", &comul, (dp * dq, dt))?;
                expect("braid", &braid, (dq * dp, dp * dq))?;
            }
        }
        if unit.support_bound() > dims[0] || counit.support_bound() > dims[0] {
            return Err(Error::Shape("unit and counit live on the degree-0 component".into()));
        }
        Ok(TruncatedBraidedBialgebra {
            field,
            dims,
            mul,
            comul,
            braid,
            unit,
            counit,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn cutoff(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, k: usize) -> usize {
        self.dims[k]
    }

    pub fn mul(&self, p: usize, q: usize) -> &Matrix {
        &self.mul[&(p, q)]
    }

    pub fn comul(&self, p: usize, q: usize) -> &Matrix {
        &self.comul[&(p, q)]
    }

    pub fn braid(&self, p: usize, q: usize) -> &Matrix {
        &self.braid[&(p, q)]
    }

    pub fn unit(&self) -> &SVec {
        &self.unit
    }

    pub fn counit(&self) -> &SVec {
        &self.counit
    }

    /// `dim A⁰ = 1`.
    pub fn is_connected(&self) -> bool {
        self.dims[0] == 1
    }

    /// The same bialgebra forgotten above degree `n`.
    pub fn truncate(&self, n: usize) -> Result<Self> {
        if n > self.cutoff() {
            return Err(Error::Truncation(format!(
                "cannot extend a bialgebra known up to degree {} to degree {n}",
                self.cutoff()
            )));
        }
        let keep = |m: &BTreeMap<(usize, usize), Matrix>| {
            m.iter()
                .filter(|((p, q), _)| p + q <= n)
                .map(|(k, v)| (*k, v.clone()))
                .collect()
        };
        TruncatedBraidedBialgebra::new(
            self.field,
            self.dims[..=n].to_vec(),
            keep(&self.mul),
            keep(&self.comul),
            keep(&self.braid),
            self.unit.clone(),
            self.counit.clone(),
        )
    }

    fn id(&self, k: usize) -> Matrix {
        Matrix::identity(self.field, self.dims[k])
    }

    fn unit_column(&self) -> Matrix {
        Matrix::from_columns(self.field, self.dims[0], std::slice::from_ref(&self.unit))
    }

    fn counit_row(&self) -> Matrix {
        Matrix::from_rows(self.field, self.dims[0], vec![self.counit.clone()])
    }

    /// Checks every axiom instance of total degree at most the cutoff.
    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::default();
        let n = self.cutoff();
        let u = self.unit_column();
        let eps = self.counit_row();
        let id = |k| self.id(k);

        // unit and counit in degree 0
        let uu = u.kron(&u);
        r.record("unit", 0, "∇(1⊗1)".into(), &(self.mul(0, 0) * &uu), &u);
        r.record("unit", 0, "Δ(1)".into(), &(self.comul(0, 0) * &u), &uu);
        r.record(
            "unit",
            0,
            "ε(1)".into(),
            &(&eps * &u),
            &Matrix::identity(self.field, 1),
        );

        for k in 0..=n {
            let inst = format!("n={k}");
            // (gr2)
            r.record("gr2", k, inst.clone(), &(self.mul(0, k) * &u.kron(&id(k))), &id(k));
            r.record("gr2", k, inst.clone(), &(self.mul(k, 0) * &id(k).kron(&u)), &id(k));
            // (gr5)
            r.record("gr5", k, inst.clone(), &(self.braid(0, k) * &u.kron(&id(k))), &id(k).kron(&u));
            r.record("gr5", k, inst.clone(), &(self.braid(k, 0) * &id(k).kron(&u)), &u.kron(&id(k)));
            // (c2)
            r.record("c2", k, inst.clone(), &(&eps.kron(&id(k)) * self.comul(0, k)), &id(k));
            r.record("c2", k, inst.clone(), &(&id(k).kron(&eps) * self.comul(k, 0)), &id(k));
            // (c5)
            r.record("c5", k, inst.clone(), &(&eps.kron(&id(k)) * self.braid(k, 0)), &id(k).kron(&eps));
            r.record("c5", k, inst, &(&id(k).kron(&eps) * self.braid(0, k)), &eps.kron(&id(k)));
        }

        for total in 0..=n {
            for a in 0..=total {
                for b in 0..=total - a {
                    let c = total - a - b;
                    let inst = format!("({a},{b},{c})");
                    // (gr1)
                    r.record(
                        "gr1",
                        total,
                        inst.clone(),
                        &(self.mul(a + b, c) * &self.mul(a, b).kron(&id(c))),
                        &(self.mul(a, b + c) * &id(a).kron(self.mul(b, c))),
                    );
                    // (gr3)
                    r.record(
                        "gr3",
                        total,
                        inst.clone(),
                        &(self.braid(a + b, c) * &self.mul(a, b).kron(&id(c))),
                        &(&(&id(c).kron(self.mul(a, b)) * &self.braid(a, c).kron(&id(b)))
                            * &id(a).kron(self.braid(b, c))),
                    );
                    // (gr4)
                    r.record(
                        "gr4",
                        total,
                        inst.clone(),
                        &(self.braid(a, b + c) * &id(a).kron(self.mul(b, c))),
                        &(&(&self.mul(b, c).kron(&id(a)) * &id(b).kron(self.braid(a, c)))
                            * &self.braid(a, b).kron(&id(c))),
                    );
                    // (c1)
                    r.record(
                        "c1",
                        total,
                        inst.clone(),
                        &(&self.comul(a, b).kron(&id(c)) * self.comul(a + b, c)),
                        &(&id(a).kron(self.comul(b, c)) * self.comul(a, b + c)),
                    );
                    // (c3)
                    r.record(
                        "c3",
                        total,
                        inst.clone(),
                        &(&id(c).kron(self.comul(a, b)) * self.braid(a + b, c)),
                        &(&(&self.braid(a, c).kron(&id(b)) * &id(a).kron(self.braid(b, c)))
                            * &self.comul(a, b).kron(&id(c))),
                    );
                    // (c4)
                    r.record(
                        "c4",
                        total,
                        inst.clone(),
                        &(&self.comul(b, c).kron(&id(a)) * self.braid(a, b + c)),
                        &(&(&id(b).kron(self.braid(a, c)) * &self.braid(a, b).kron(&id(c)))
                            * &id(a).kron(self.comul(b, c))),
                    );
                    // braid equation on A^a ⊗ A^b ⊗ A^c
                    r.record(
                        "braid",
                        total,
                        inst,
                        &(&(&self.braid(b, c).kron(&id(a)) * &id(b).kron(self.braid(a, c)))
                            * &self.braid(a, b).kron(&id(c))),
                        &(&(&id(c).kron(self.braid(a, b)) * &self.braid(a, c).kron(&id(b)))
                            * &id(a).kron(self.braid(b, c))),
                    );
                }
            }
        }

        // Δ ∇ = (∇ ⊗ ∇)(A ⊗ c ⊗ A)(Δ ⊗ Δ), component A^p ⊗ A^q → A^r ⊗ A^s
        for total in 0..=n {
            for p in 0..=total {
                let q = total - p;
                for rr in 0..=total {
                    let s = total - rr;
                    let lhs = self.comul(rr, s) * self.mul(p, q);
                    let mut rhs = Matrix::zero(self.field, self.dims[rr] * self.dims[s], self.dims[p] * self.dims[q]);
                    for p1 in 0..=p.min(rr) {
                        let q1 = rr - p1;
                        if q1 > q {
                            continue;
                        }
                        let (p2, q2) = (p - p1, q - q1);
                        let split = self.comul(p1, p2).kron(self.comul(q1, q2));
                        let middle = id(p1).kron(self.braid(p2, q1)).kron(&id(q2));
                        let join = self.mul(p1, q1).kron(self.mul(p2, q2));
                        rhs = &rhs + &(&(&join * &middle) * &split);
                    }
                    r.record("bialgebra", total, format!("Δ^{{{rr},{s}}}∇^{{{p},{q}}}"), &lhs, &rhs);
                }
            }
        }
        r
    }

    pub fn to_json(&self) -> BialgebraJson {
        let dump = |m: &BTreeMap<(usize, usize), Matrix>| {
            m.iter()
                .map(|((p, q), v)| (key(*p, *q), v.to_strings()))
                .collect()
        };
        BialgebraJson {
            field: self.field.to_string(),
            dims: self.dims.clone(),
            mul: dump(&self.mul),
            comul: dump(&self.comul),
            braid: dump(&self.braid),
            unit: Some(self.unit.to_dense(self.dims[0], self.field).iter().map(|x| x.to_string()).collect()),
            counit: Some(self.counit.to_dense(self.dims[0], self.field).iter().map(|x| x.to_string()).collect()),
        }
    }

    pub fn from_json(json: &BialgebraJson) -> Result<Self> {
        let field = FieldSpec::parse(&json.field)?;
        let dims = json.dims.clone();
        if dims.is_empty() {
            return Err(Error::Shape("`dims` must list at least the degree-0 dimension".into()));
        }
        let parse_vec = |xs: &[String]| -> Result<Vec<crate::scalars::Scalar>> {
            xs.iter().map(|s| field.parse_scalar(s)).collect()
        };
        let load = |name: &str,
                    raw: &BTreeMap<String, Vec<String>>,
                    shape: &dyn Fn(usize, usize) -> (usize, usize)|
         -> Result<BTreeMap<(usize, usize), Matrix>> {
            let mut out = BTreeMap::new();
            for (k, values) in raw {
                let (p, q) = parse_key(k)?;
                if p + q >= dims.len() {
                    return Err(Error::Shape(format!(
                        "{name} component {k} exceeds the cutoff {}",
                        dims.len() - 1
                    )));
                }
                let (rows, cols) = shape(p, q);
                out.insert((p, q), Matrix::from_dense(field, rows, cols, &parse_vec(values)?)?);
            }
            Ok(out)
        };
        let d = &dims;
        let mul = load("mul", &json.mul, &|p, q| (d[p + q], d[p] * d[q]))?;
        let comul = load("comul", &json.comul, &|p, q| (d[p] * d[q], d[p + q]))?;
        let braid = load("braid", &json.braid, &|p, q| (d[q] * d[p], d[p] * d[q]))?;
        let default_unit = || vec!["1".to_string()];
        let unit = SVec::from_dense(&parse_vec(json.unit.as_deref().unwrap_or(&default_unit()))?);
        let counit = SVec::from_dense(&parse_vec(json.counit.as_deref().unwrap_or(&default_unit()))?);
        TruncatedBraidedBialgebra::new(field, dims, mul, comul, braid, unit, counit)
    }
}

fn parse_key(k: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse(format!("bidegree key `{k}` is not of the form \"p,q\""));
    let (p, q) = k.split_once(',').ok_or_else(bad)?;
    Ok((p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?))
}

/// Serialized form: dense row-major matrices of exact scalars per bidegree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BialgebraJson {
    #[serde(default = "default_field")]
    pub field: String,
    pub dims: Vec<usize>,
    pub mul: BTreeMap<String, Vec<String>>,
    pub comul: BTreeMap<String, Vec<String>>,
    pub braid: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit: Option<Vec<String>>,
}

fn default_field() -> String {
    "Q".into()
}
