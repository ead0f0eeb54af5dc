//! Job requests: one command, its JSON payload, and the command-line options.

use ncinterp::applications::{
    gram_schmidt, newton_interpolate, orthogonal_expansion, orthogonal_norms, taylor_interpolate, GramData,
    Interpolant, NodeSet,
};
use ncinterp::json::{BiorthoDoc, MatrixDoc};
use ncinterp::{
    biorthogonalize, biorthogonalize_permuted, delta_left, delta_right, inverse_by_expansion, pairing_truncated,
    Algorithm, IndexSequence, Matrix, Rational, RingElement,
};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::diagnostic::Diagnostic;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Invert,
    Biortho,
    Diffderiv,
    Newton,
    Taylor,
    Gram,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Sum over corner quasideterminants (`expansion` is accepted too).
    #[default]
    #[value(alias = "expansion")]
    Theorem6,
    /// Gauss-Jordan elimination.
    Elimination,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Options {
    pub method: Method,
    pub algorithm: Option<Algorithm>,
    pub order: Option<usize>,
    pub cols: Option<Vec<usize>>,
    pub rows: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiffderivPayload {
    pub matrix: MatrixDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<Vec<RingElement>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<Vec<RingElement>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NewtonPayload {
    pub nodes: Vec<Rational>,
    pub values: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TaylorPayload {
    pub x0: Rational,
    pub derivs: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GramPayload {
    pub gram: MatrixDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<Vec<Rational>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<Vec<Rational>>,
}

/// A validated payload; the variant follows the command.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Payload {
    Matrix(MatrixDoc),
    Diffderiv(DiffderivPayload),
    Newton(NewtonPayload),
    Taylor(TaylorPayload),
    Gram(GramPayload),
}

impl Payload {
    pub fn parse(command: Command, text: &str) -> Result<Payload, Diagnostic> {
        let wrap = |e: serde_json::Error| Diagnostic::from_json(&e, "input");
        Ok(match command {
            Command::Invert | Command::Biortho => Payload::Matrix(serde_json::from_str(text).map_err(wrap)?),
            Command::Diffderiv => Payload::Diffderiv(serde_json::from_str(text).map_err(wrap)?),
            Command::Newton => Payload::Newton(serde_json::from_str(text).map_err(wrap)?),
            Command::Taylor => Payload::Taylor(serde_json::from_str(text).map_err(wrap)?),
            Command::Gram => Payload::Gram(serde_json::from_str(text).map_err(wrap)?),
        })
    }

    /// Canonical text form: pretty-printed with a trailing newline.
    pub fn to_canonical_string(&self) -> String {
        to_pretty(self)
    }
}

pub struct JobRequest {
    pub command: Command,
    pub payload: Payload,
    pub options: Options,
}

impl JobRequest {
    pub fn parse(command: Command, text: &str, options: Options) -> Result<JobRequest, Diagnostic> {
        Ok(JobRequest { command, payload: Payload::parse(command, text)?, options })
    }

    /// Run the job and return the JSON result document.
    pub fn run(&self) -> Result<Value, Diagnostic> {
        match (&self.command, &self.payload) {
            (Command::Invert, Payload::Matrix(doc)) => self.invert(doc),
            (Command::Biortho, Payload::Matrix(doc)) => self.biortho(doc),
            (Command::Diffderiv, Payload::Diffderiv(p)) => self.diffderiv(p),
            (Command::Newton, Payload::Newton(p)) => self.newton(p),
            (Command::Taylor, Payload::Taylor(p)) => self.taylor(p),
            (Command::Gram, Payload::Gram(p)) => self.gram(p),
            _ => unreachable!("payload parsed for its command"),
        }
    }

    fn invert(&self, doc: &MatrixDoc) -> Result<Value, Diagnostic> {
        let m = load_matrix(doc, "payload")?;
        if !m.is_square() {
            return Err(Diagnostic::new("SchemaError", "matrix must be square", "payload.rows"));
        }
        let inverse = match (self.options.method, m.n_rows()) {
            (Method::Theorem6, 0) | (Method::Elimination, _) => m.invert(),
            (Method::Theorem6, n) => inverse_by_expansion(&m, n - 1),
        }
        .map_err(|e| Diagnostic::from_core(e, "payload.rows"))?;
        Ok(to_value(&MatrixDoc::from_matrix(&inverse)))
    }

    fn biortho(&self, doc: &MatrixDoc) -> Result<Value, Diagnostic> {
        let m = load_matrix(doc, "payload")?;
        let result = match (&self.options.cols, &self.options.rows) {
            (None, None) => {
                let n = self.order_or_full(&m)?;
                biorthogonalize(&m, n)
            }
            _ => {
                let (cols, rows) = self.sequences(&m)?;
                biorthogonalize_permuted(&m, &cols, &rows)
            }
        }
        .map_err(|e| Diagnostic::from_core(e, "payload.rows"))?;
        Ok(to_value(&BiorthoDoc::new(&result)))
    }

    fn diffderiv(&self, p: &DiffderivPayload) -> Result<Value, Diagnostic> {
        let m = load_matrix(&p.matrix, "payload.matrix")?;
        if p.f.is_none() && p.g.is_none() {
            return Err(Diagnostic::new("SchemaError", "payload needs at least one of \"f\" and \"g\"", "payload"));
        }
        let (cols, rows) = self.sequences(&m)?;
        let algorithm = self.options.algorithm.unwrap_or(Algorithm::Biortho);
        let right =
            p.f.as_ref()
                .map(|f| {
                    check_data(f, &p.matrix, "payload.f")?;
                    delta_right(f, &m, &cols, &rows, algorithm).map_err(|e| Diagnostic::from_core(e, "payload.f"))
                })
                .transpose()?;
        let left =
            p.g.as_ref()
                .map(|g| {
                    check_data(g, &p.matrix, "payload.g")?;
                    delta_left(g, &m, &cols, &rows, algorithm).map_err(|e| Diagnostic::from_core(e, "payload.g"))
                })
                .transpose()?;

        #[derive(Serialize)]
        struct Out {
            algorithm: Algorithm,
            order: usize,
            cols: Vec<usize>,
            rows: Vec<usize>,
            #[serde(skip_serializing_if = "Option::is_none")]
            right: Option<RingElement>,
            #[serde(skip_serializing_if = "Option::is_none")]
            left: Option<RingElement>,
        }
        Ok(to_value(&Out {
            algorithm,
            order: cols.len() - 1,
            cols: cols.as_slice().to_vec(),
            rows: rows.as_slice().to_vec(),
            right,
            left,
        }))
    }

    fn newton(&self, p: &NewtonPayload) -> Result<Value, Diagnostic> {
        let nodes = NodeSet::new(p.nodes.clone()).map_err(|e| Diagnostic::from_core(e, "payload.nodes"))?;
        if p.values.len() != nodes.len() || nodes.is_empty() {
            return Err(Diagnostic::new(
                "SchemaError",
                format!("expected {} values, got {}", nodes.len(), p.values.len()),
                "payload.values",
            ));
        }
        let n = self.order_bounded(nodes.len())?;
        let fit = newton_interpolate(&nodes, &p.values, n).map_err(|e| Diagnostic::from_core(e, "payload"))?;
        Ok(interpolant_value(&fit))
    }

    fn taylor(&self, p: &TaylorPayload) -> Result<Value, Diagnostic> {
        if p.derivs.is_empty() {
            return Err(Diagnostic::new("SchemaError", "at least one derivative is required", "payload.derivs"));
        }
        let n = self.order_bounded(p.derivs.len())?;
        let fit = taylor_interpolate(&p.x0, &p.derivs, n).map_err(|e| Diagnostic::from_core(e, "payload"))?;
        Ok(interpolant_value(&fit))
    }

    fn gram(&self, p: &GramPayload) -> Result<Value, Diagnostic> {
        let g = p.gram.to_rational_matrix().map_err(|e| Diagnostic::from_core(e, "payload.gram"))?;
        let data = GramData::new(g.clone()).map_err(|e| Diagnostic::from_core(e, "payload.gram"))?;
        let n = self.order_bounded(g.n_rows())?;
        let basis = gram_schmidt(&data, n).map_err(|e| Diagnostic::from_core(e, "payload.gram"))?;
        let norms = orthogonal_norms(&data, &basis).map_err(|e| Diagnostic::from_core(e, "payload.gram"))?;

        #[derive(Serialize)]
        struct Out {
            order: usize,
            #[serde(rename = "C")]
            c: MatrixDoc,
            pivots: Vec<Rational>,
            norms: Vec<Rational>,
            #[serde(skip_serializing_if = "Option::is_none")]
            expansion: Option<Rational>,
            #[serde(skip_serializing_if = "Option::is_none")]
            pairing: Option<Rational>,
        }
        let (expansion, pairing) = match (&p.f, &p.g) {
            (Some(f), Some(h)) => {
                let e = orthogonal_expansion(&data, f, h, n).map_err(|e| Diagnostic::from_core(e, "payload"))?;
                let q = pairing_truncated(f, h, &g, n).map_err(|e| Diagnostic::from_core(e, "payload"))?;
                (Some(e), Some(q))
            }
            (None, None) => (None, None),
            _ => return Err(Diagnostic::new("SchemaError", "\"f\" and \"g\" must be given together", "payload")),
        };
        Ok(to_value(&Out {
            order: n,
            c: MatrixDoc::from_rational(basis.c()),
            pivots: basis.pivots().to_vec(),
            norms,
            expansion,
            pairing,
        }))
    }

    fn order_or_full(&self, m: &Matrix<RingElement>) -> Result<usize, Diagnostic> {
        let size = m.n_rows().min(m.n_cols());
        self.order_bounded(size)
    }

    /// `--order`, defaulting to `size - 1` and checked against it.
    fn order_bounded(&self, size: usize) -> Result<usize, Diagnostic> {
        if size == 0 {
            return Err(Diagnostic::new("SchemaError", "input is empty", "payload"));
        }
        match self.options.order {
            None => Ok(size - 1),
            Some(n) if n < size => Ok(n),
            Some(n) => Err(Diagnostic::new(
                "SchemaError",
                format!("order {n} needs {} entries, input has {size}", n + 1),
                "--order",
            )),
        }
    }

    /// `--cols`/`--rows`, each defaulting to `0 …= order`.
    fn sequences(&self, m: &Matrix<RingElement>) -> Result<(IndexSequence, IndexSequence), Diagnostic> {
        let default = || -> Result<Vec<usize>, Diagnostic> { Ok((0..=self.order_or_full(m)?).collect()) };
        let cols = match &self.options.cols {
            Some(c) => c.clone(),
            None => default()?,
        };
        let rows = match &self.options.rows {
            Some(r) => r.clone(),
            None => default()?,
        };
        let cols = IndexSequence::new(cols).map_err(|e| Diagnostic::from_core(e, "--cols"))?;
        let rows = IndexSequence::new(rows).map_err(|e| Diagnostic::from_core(e, "--rows"))?;
        cols.check_bounds(m.n_cols()).map_err(|e| Diagnostic::from_core(e, "--cols"))?;
        rows.check_bounds(m.n_rows()).map_err(|e| Diagnostic::from_core(e, "--rows"))?;
        if cols.len() != rows.len() || cols.is_empty() {
            return Err(Diagnostic::new(
                "SchemaError",
                "--cols and --rows must have the same nonzero length",
                "--cols",
            ));
        }
        Ok((cols, rows))
    }
}

fn load_matrix(doc: &MatrixDoc, location: &str) -> Result<Matrix<RingElement>, Diagnostic> {
    doc.to_matrix().map_err(|e| Diagnostic::from_core(e, location))
}

fn check_data(values: &[RingElement], doc: &MatrixDoc, location: &str) -> Result<(), Diagnostic> {
    match values.iter().find(|v| !doc.ring.admits(v)) {
        Some(bad) => {
            Err(Diagnostic::new("SchemaError", format!("entry {bad} does not match the matrix ring"), location))
        }
        None => Ok(()),
    }
}

fn interpolant_value(fit: &Interpolant) -> Value {
    #[derive(Serialize)]
    struct Out<'a> {
        order: usize,
        differences: Vec<Rational>,
        expansion: &'a ncinterp::NewtonExpansion<Rational, ncinterp::applications::Polynomial>,
        polynomial: &'a ncinterp::applications::Polynomial,
    }
    to_value(&Out {
        order: fit.expansion.order(),
        differences: fit.differences(),
        expansion: &fit.expansion,
        polynomial: &fit.polynomial,
    })
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable result")
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty<T: Serialize + ?Sized>(x: &T) -> String {
    let mut s = serde_json::to_string_pretty(x).expect("serializable");
    s.push('\n');
    s
}

/// Replace every exact rational string by a decimal approximation.
pub fn approximate(value: &Value, digits: usize) -> Value {
    match value {
        Value::String(s) => match s.parse::<Rational>() {
            Ok(r) => Value::String(r.to_decimal_string(digits)),
            Err(_) => value.clone(),
        },
        Value::Array(items) => Value::Array(items.iter().map(|v| approximate(v, digits)).collect()),
        Value::Object(map) => Value::Object(map.iter().map(|(k, v)| (k.clone(), approximate(v, digits))).collect()),
        other => other.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(command: Command, text: &str, options: Options) -> Result<Value, Diagnostic> {
        JobRequest::parse(command, text, options)?.run()
    }

    #[test]
    fn invert_both_methods() {
        let text = r#"{"ring":"rational","rows":[["1","2"],["3","4"]]}"#;
        let expected = serde_json::json!({"ring":"rational","rows":[["-2","1"],["3/2","-1/2"]]});
        for method in [Method::Theorem6, Method::Elimination] {
            let out = run(Command::Invert, text, Options { method, ..Options::default() }).unwrap();
            assert_eq!(out, expected);
        }
    }

    #[test]
    fn invert_zero_matrix_fails_at_order_zero() {
        let text = r#"{"ring":"rational","rows":[["0","0"],["0","0"]]}"#;
        let err = run(Command::Invert, text, Options::default()).unwrap_err();
        assert_eq!((err.code, err.order, err.exit_code()), ("NonGeneric", Some(0), 3));
    }

    #[test]
    fn newton_squares() {
        let text = r#"{"nodes":["0","1","2"],"values":["0","1","4"]}"#;
        let out = run(Command::Newton, text, Options::default()).unwrap();
        assert_eq!(out["polynomial"], serde_json::json!(["0", "0", "1"]));
        assert_eq!(out["differences"], serde_json::json!(["0", "1", "1"]));
    }

    #[test]
    fn parse_and_schema_errors() {
        let err = run(Command::Newton, "{", Options::default()).unwrap_err();
        assert_eq!(err.code, "ParseError");
        let err = run(Command::Newton, r#"{"nodes":[1]}"#, Options::default()).unwrap_err();
        assert_eq!(err.code, "SchemaError");
    }

    #[test]
    fn approximation_marks_only_rationals() {
        let v = serde_json::json!({"algorithm": "biortho", "x": ["1/3", "2"], "order": 2});
        assert_eq!(approximate(&v, 2), serde_json::json!({"algorithm": "biortho", "x": ["0.33", "2.00"], "order": 2}));
    }
}
