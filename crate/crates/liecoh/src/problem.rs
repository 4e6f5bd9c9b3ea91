//! The line-oriented problem file format:
//!
//! ```text
//! field q                    # or: field fp 5
//! algebra NAME
//!   basis L1 L2 ... Ln
//!   bracket Li Lj = c1 Lk1 [c2 Lk2 ...]   # only i<j pairs; omitted = 0
//! ideal NAME
//!   span v1, v2, ...                      # vi = "c1 L1 + c2 L2" or a label
//! module NAME dim d
//!   action Li = [[a11, ..., a1d], ..., [ad1, ..., add]]
//! ```
//!
//! Scalars are written `p`, `-p` or `p/q`. `#` starts a comment. Parsing
//! then validates all Lie axioms; emission is canonical, so
//! `emit(parse(text))` is a fixed point.

use crate::catalog;
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec, PrimeField, Rationals};
use crate::lie::{BracketTerm, IdealData, LieAlgebra, LieModule};
use crate::linalg::{Matrix, Subspace};

/// A parsed and validated problem: algebra, optional ideal, module.
#[derive(Debug, Clone)]
pub struct ProblemFile<F: Field> {
    pub name: String,
    pub field: F,
    pub algebra: LieAlgebra<F>,
    pub ideal: Option<IdealData<F>>,
    pub ideal_name: Option<String>,
    pub module: LieModule<F>,
    pub module_name: String,
}

/// A problem over whichever field the file declares.
pub enum AnyProblem {
    Q(ProblemFile<Rationals>),
    Fp(ProblemFile<PrimeField>),
}

/// Reads the `field` directive and dispatches to the typed parser. An
/// explicit spec overrides the directive (scalars are re-read in that
/// field).
pub fn parse_problem(text: &str, override_spec: Option<FieldSpec>) -> Result<AnyProblem> {
    let spec = match override_spec {
        Some(s) => s,
        None => declared_field(text)?,
    };
    match spec {
        FieldSpec::Rationals => Ok(AnyProblem::Q(parse_with(Rationals, text)?)),
        FieldSpec::PrimeField(p) => Ok(AnyProblem::Fp(parse_with(PrimeField::new(p)?, text)?)),
    }
}

fn declared_field(text: &str) -> Result<FieldSpec> {
    for (lineno, raw) in text.lines().enumerate() {
        let toks = tokenize(lineno + 1, raw);
        if toks.is_empty() {
            continue;
        }
        if toks[0].text != "field" {
            return Err(Error::parse(
                lineno + 1,
                toks[0].col,
                "expected a `field` directive first",
            ));
        }
        return parse_field_directive(lineno + 1, &toks);
    }
    Err(Error::parse(1, 1, "empty problem file"))
}

fn parse_field_directive(line: usize, toks: &[Token]) -> Result<FieldSpec> {
    match toks.get(1).map(|t| t.text.as_str()) {
        Some("q") if toks.len() == 2 => Ok(FieldSpec::Rationals),
        Some("fp") => {
            let p = toks
                .get(2)
                .and_then(|t| t.text.parse::<u64>().ok())
                .ok_or_else(|| Error::parse(line, toks[0].col, "expected `field fp P`"))?;
            if !crate::field::is_prime(p) {
                return Err(Error::parse(
                    line,
                    toks[2].col,
                    format!("field mismatch: {p} is not prime"),
                ));
            }
            Ok(FieldSpec::PrimeField(p))
        }
        _ => Err(Error::parse(
            line,
            toks[0].col,
            "expected `field q` or `field fp P`",
        )),
    }
}

#[derive(Debug, Clone)]
struct Token {
    col: usize,
    text: String,
}

fn tokenize(_line: usize, raw: &str) -> Vec<Token> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut cur_col = 0;
    for (i, ch) in raw.chars().enumerate() {
        if ch == '#' {
            break;
        }
        if ch.is_whitespace() || matches!(ch, '[' | ']' | ',' | '=' | '+') {
            if !cur.is_empty() {
                out.push(Token {
                    col: cur_col + 1,
                    text: std::mem::take(&mut cur),
                });
            }
            if !ch.is_whitespace() {
                out.push(Token {
                    col: i + 1,
                    text: ch.to_string(),
                });
            }
        } else {
            if cur.is_empty() {
                cur_col = i;
            }
            cur.push(ch);
        }
    }
    if !cur.is_empty() {
        out.push(Token {
            col: cur_col + 1,
            text: cur,
        });
    }
    out
}

struct Parser<'a, F: Field> {
    field: F,
    line: usize,
    algebra_name: Option<String>,
    labels: Vec<String>,
    brackets: Vec<BracketTerm<<F as Field>::Elem>>,
    seen_pairs: Vec<(usize, usize)>,
    ideal_name: Option<String>,
    span_vectors: Vec<Vec<<F as Field>::Elem>>,
    module_name: Option<String>,
    module_dim: Option<usize>,
    actions: Vec<(usize, Matrix<F>)>,
    text: &'a str,
}

/// Section being filled, to reject out-of-place lines.
#[derive(PartialEq, Clone, Copy)]
enum Section {
    Start,
    Algebra,
    Ideal,
    Module,
}

/// Parses a problem file over a known field.
pub fn parse_with<F: Field>(field: F, text: &str) -> Result<ProblemFile<F>> {
    let p = Parser {
        field,
        line: 0,
        algebra_name: None,
        labels: Vec::new(),
        brackets: Vec::new(),
        seen_pairs: Vec::new(),
        ideal_name: None,
        span_vectors: Vec::new(),
        module_name: None,
        module_dim: None,
        actions: Vec::new(),
        text,
    };
    p.run()
}

impl<F: Field> Parser<'_, F> {
    fn err(&self, col: usize, msg: impl Into<String>) -> Error {
        Error::parse(self.line, col, msg)
    }

    fn scalar(&self, tok: &Token) -> Result<F::Elem> {
        self.field
            .parse(&tok.text)
            .map_err(|e| self.err(tok.col, format!("field mismatch: {e}")))
    }

    fn label(&self, tok: &Token) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| *l == tok.text)
            .ok_or_else(|| self.err(tok.col, format!("unknown label `{}`", tok.text)))
    }

    fn run(mut self) -> Result<ProblemFile<F>> {
        let mut section = Section::Start;
        let mut saw_field = false;
        let lines: Vec<String> = self.text.lines().map(str::to_string).collect();
        for (lineno, raw) in lines.iter().enumerate() {
            self.line = lineno + 1;
            let toks = tokenize(self.line, raw);
            if toks.is_empty() {
                continue;
            }
            let head = toks[0].text.as_str();
            match head {
                "field" => {
                    if saw_field {
                        return Err(self.err(toks[0].col, "duplicate `field` directive"));
                    }
                    parse_field_directive(self.line, &toks)?;
                    saw_field = true;
                }
                "algebra" => {
                    if !saw_field {
                        return Err(self.err(toks[0].col, "expected a `field` directive first"));
                    }
                    if self.algebra_name.is_some() {
                        return Err(self.err(toks[0].col, "duplicate `algebra` section"));
                    }
                    let name = toks
                        .get(1)
                        .ok_or_else(|| self.err(toks[0].col, "expected `algebra NAME`"))?;
                    self.algebra_name = Some(name.text.clone());
                    section = Section::Algebra;
                }
                "basis" => {
                    if section != Section::Algebra {
                        return Err(self.err(toks[0].col, "`basis` outside an algebra section"));
                    }
                    if !self.labels.is_empty() {
                        return Err(self.err(toks[0].col, "duplicate `basis` line"));
                    }
                    for t in &toks[1..] {
                        if self.labels.contains(&t.text) {
                            return Err(self.err(t.col, format!("duplicate label `{}`", t.text)));
                        }
                        self.labels.push(t.text.clone());
                    }
                    if self.labels.is_empty() {
                        return Err(self.err(toks[0].col, "empty basis"));
                    }
                }
                "bracket" => {
                    if section != Section::Algebra || self.labels.is_empty() {
                        return Err(self.err(toks[0].col, "`bracket` before `basis`"));
                    }
                    self.parse_bracket(&toks)?;
                }
                "ideal" => {
                    if self.algebra_name.is_none() {
                        return Err(self.err(toks[0].col, "`ideal` before `algebra`"));
                    }
                    if self.ideal_name.is_some() {
                        return Err(self.err(toks[0].col, "duplicate `ideal` section"));
                    }
                    let name = toks
                        .get(1)
                        .ok_or_else(|| self.err(toks[0].col, "expected `ideal NAME`"))?;
                    self.ideal_name = Some(name.text.clone());
                    section = Section::Ideal;
                }
                "span" => {
                    if section != Section::Ideal {
                        return Err(self.err(toks[0].col, "`span` outside an ideal section"));
                    }
                    self.parse_span(&toks)?;
                }
                "module" => {
                    if self.algebra_name.is_none() {
                        return Err(self.err(toks[0].col, "`module` before `algebra`"));
                    }
                    if self.module_name.is_some() {
                        return Err(self.err(toks[0].col, "duplicate `module` section"));
                    }
                    if toks.len() != 4 || toks[2].text != "dim" {
                        return Err(self.err(toks[0].col, "expected `module NAME dim d`"));
                    }
                    let d: usize = toks[3]
                        .text
                        .parse()
                        .map_err(|_| self.err(toks[3].col, "bad module dimension"))?;
                    self.module_name = Some(toks[1].text.clone());
                    self.module_dim = Some(d);
                    section = Section::Module;
                }
                "action" => {
                    if section != Section::Module {
                        return Err(self.err(toks[0].col, "`action` outside a module section"));
                    }
                    self.parse_action(&toks)?;
                }
                other => {
                    return Err(self.err(toks[0].col, format!("unknown directive `{other}`")));
                }
            }
        }
        self.finish()
    }

    fn parse_bracket(&mut self, toks: &[Token]) -> Result<()> {
        // bracket Li Lj = c1 Lk1 [c2 Lk2 ...]
        if toks.len() < 6 || toks[3].text != "=" {
            return Err(self.err(toks[0].col, "expected `bracket Li Lj = c Lk ...`"));
        }
        let i = self.label(&toks[1])?;
        let j = self.label(&toks[2])?;
        if i >= j {
            return Err(self.err(
                toks[1].col,
                "bracket declarations must use basis order (i < j)",
            ));
        }
        if self.seen_pairs.contains(&(i, j)) {
            return Err(self.err(toks[1].col, "duplicate bracket declaration"));
        }
        let rhs = &toks[4..];
        if rhs.len() % 2 != 0 {
            return Err(self.err(toks[4].col, "bracket right-hand side must be (c Lk) pairs"));
        }
        let mut terms = Vec::new();
        for pair in rhs.chunks(2) {
            let c = self.scalar(&pair[0])?;
            let k = self.label(&pair[1])?;
            terms.push((k, c));
        }
        self.seen_pairs.push((i, j));
        self.brackets.push((i, j, terms));
        Ok(())
    }

    fn parse_span(&mut self, toks: &[Token]) -> Result<()> {
        // span VEC [, VEC ...] where VEC = label | c1 L1 + c2 L2 + ...
        let groups = toks[1..].split(|t| t.text == ",");
        for group in groups {
            if group.is_empty() {
                return Err(self.err(toks[0].col, "empty span vector"));
            }
            let mut v = vec![self.field.zero(); self.labels.len()];
            for term in group.split(|t| t.text == "+") {
                let (coeff, lab) = match term {
                    [l] => (self.field.one(), l),
                    [c, l] => (self.scalar(c)?, l),
                    _ => {
                        return Err(self.err(
                            term.first().map_or(1, |t| t.col),
                            "span term must be `label` or `coeff label`",
                        ))
                    }
                };
                let k = self.label(lab)?;
                v[k] = self.field.add(&v[k], &coeff);
            }
            self.span_vectors.push(v);
        }
        Ok(())
    }

    fn parse_action(&mut self, toks: &[Token]) -> Result<()> {
        // action Li = [[a, ...], ...]
        let d = self.module_dim.expect("inside module section");
        if toks.len() < 3 || toks[2].text != "=" {
            return Err(self.err(toks[0].col, "expected `action Li = [[...], ...]`"));
        }
        let i = self.label(&toks[1])?;
        if self.actions.iter().any(|(j, _)| *j == i) {
            return Err(self.err(toks[1].col, "duplicate action declaration"));
        }
        let mut pos = 3;
        let expect = |p: &Self, pos: usize, what: &str| -> Result<&Token> {
            toks.get(pos)
                .ok_or_else(|| p.err(toks.last().map_or(1, |t| t.col), format!("expected {what}")))
        };
        if expect(self, pos, "`[`")?.text != "[" {
            return Err(self.err(toks[pos].col, "expected `[`"));
        }
        pos += 1;
        let mut rows: Vec<Vec<F::Elem>> = Vec::new();
        loop {
            if expect(self, pos, "`[`")?.text != "[" {
                return Err(self.err(toks[pos].col, "expected `[` to open a row"));
            }
            pos += 1;
            let mut row = Vec::new();
            loop {
                let t = expect(self, pos, "a scalar")?;
                row.push(self.scalar(t)?);
                pos += 1;
                let sep = expect(self, pos, "`,` or `]`")?;
                pos += 1;
                match sep.text.as_str() {
                    "," => continue,
                    "]" => break,
                    _ => return Err(self.err(sep.col, "expected `,` or `]`")),
                }
            }
            if row.len() != d {
                return Err(self.err(toks[pos - 1].col, format!("row must have {d} entries")));
            }
            rows.push(row);
            let sep = expect(self, pos, "`,` or `]`")?;
            pos += 1;
            match sep.text.as_str() {
                "," => continue,
                "]" => break,
                _ => return Err(self.err(sep.col, "expected `,` or `]`")),
            }
        }
        if rows.len() != d {
            return Err(self.err(toks[0].col, format!("matrix must have {d} rows")));
        }
        if pos != toks.len() {
            return Err(self.err(toks[pos].col, "trailing tokens after matrix"));
        }
        self.actions
            .push((i, Matrix::from_rows(self.field.clone(), rows)));
        Ok(())
    }

    fn finish(self) -> Result<ProblemFile<F>> {
        let name = self
            .algebra_name
            .ok_or_else(|| Error::parse(1, 1, "missing `algebra` section"))?;
        let module_name = self
            .module_name
            .clone()
            .ok_or_else(|| Error::parse(1, 1, "missing `module` section"))?;
        let algebra = LieAlgebra::from_brackets(self.field.clone(), self.labels.clone(), &self.brackets);
        if let Err(v) = algebra.validate() {
            return Err(Error::ValidationFailed(format!("algebra `{name}`: {v}")));
        }

        let dim = self.module_dim.expect("module dim parsed");
        let mut action: Vec<Matrix<F>> = (0..algebra.dim())
            .map(|_| Matrix::zeros(self.field.clone(), dim, dim))
            .collect();
        for (i, a) in &self.actions {
            action[*i] = a.clone();
        }
        let module = LieModule::new(algebra.clone(), dim, action);
        if let Err(v) = module.validate() {
            return Err(Error::ValidationFailed(format!(
                "module `{module_name}`: {v}"
            )));
        }

        let ideal = match &self.ideal_name {
            None => None,
            Some(iname) => {
                let span = Subspace::from_spanning(
                    self.field.clone(),
                    algebra.dim(),
                    self.span_vectors.clone(),
                );
                match IdealData::new(algebra.clone(), span) {
                    Ok(id) => Some(id),
                    Err(e) => {
                        return Err(Error::ValidationFailed(format!("ideal `{iname}`: {e}")))
                    }
                }
            }
        };

        Ok(ProblemFile {
            name,
            field: self.field,
            algebra,
            ideal,
            ideal_name: self.ideal_name,
            module,
            module_name,
        })
    }
}

/// Canonical emission; a fixed point of parse ∘ emit.
pub fn emit<F: Field>(p: &ProblemFile<F>) -> String {
    let f = &p.field;
    let mut out = String::new();
    out.push_str(&format!("field {}\n", render_field_spec(f.spec())));
    out.push_str(&format!("algebra {}\n", p.name));
    out.push_str(&format!("  basis {}\n", p.algebra.labels().join(" ")));
    for i in 0..p.algebra.dim() {
        for j in i + 1..p.algebra.dim() {
            let c = p.algebra.bracket_basis(i, j);
            if c.iter().all(|v| f.is_zero(v)) {
                continue;
            }
            let terms: Vec<String> = c
                .iter()
                .enumerate()
                .filter(|(_, v)| !f.is_zero(v))
                .map(|(k, v)| format!("{} {}", f.format(v), p.algebra.labels()[k]))
                .collect();
            out.push_str(&format!(
                "  bracket {} {} = {}\n",
                p.algebra.labels()[i],
                p.algebra.labels()[j],
                terms.join(" ")
            ));
        }
    }
    if let (Some(ideal), Some(iname)) = (&p.ideal, &p.ideal_name) {
        out.push_str(&format!("ideal {iname}\n"));
        for c in 0..ideal.dim() {
            let col = ideal.span().basis().column(c);
            out.push_str(&format!("  span {}\n", render_vector(f, &col, p.algebra.labels())));
        }
    }
    out.push_str(&format!("module {} dim {}\n", p.module_name, p.module.dim()));
    for i in 0..p.algebra.dim() {
        let a = p.module.action_basis(i);
        if a.is_zero() {
            continue;
        }
        let rows: Vec<String> = (0..a.rows())
            .map(|r| {
                let entries: Vec<String> = (0..a.cols()).map(|c| f.format(a.at(r, c))).collect();
                format!("[{}]", entries.join(", "))
            })
            .collect();
        out.push_str(&format!(
            "  action {} = [{}]\n",
            p.algebra.labels()[i],
            rows.join(", ")
        ));
    }
    out
}

fn render_field_spec(spec: FieldSpec) -> String {
    match spec {
        FieldSpec::Rationals => "q".to_string(),
        FieldSpec::PrimeField(p) => format!("fp {p}"),
    }
}

fn render_vector<F: Field>(f: &F, v: &[F::Elem], labels: &[String]) -> String {
    let terms: Vec<(usize, &F::Elem)> = v
        .iter()
        .enumerate()
        .filter(|(_, x)| !f.is_zero(x))
        .collect();
    if terms.len() == 1 && f.is_one(terms[0].1) {
        return labels[terms[0].0].clone();
    }
    terms
        .iter()
        .map(|(k, x)| format!("{} {}", f.format(x), labels[*k]))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// The canonical Heisenberg problem: g_m over the given field, the center
/// as ideal, the trivial 1-dimensional module.
pub fn heisenberg_problem<F: Field>(field: F, m: usize) -> ProblemFile<F> {
    let algebra = catalog::heisenberg(field.clone(), m);
    let ideal = catalog::heisenberg_center(&algebra);
    let module = LieModule::trivial(algebra.clone(), 1);
    ProblemFile {
        name: format!("heisenberg{m}"),
        field,
        algebra,
        ideal: Some(ideal),
        ideal_name: Some("center".to_string()),
        module,
        module_name: "trivial".to_string(),
    }
}
