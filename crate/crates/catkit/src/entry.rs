use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;

use exactpoly::{parse, parse_with, PolyError, Polynomial};
use liealg::{LieAlgebra, ParametricTorus, Vector};
use num_traits::Zero;

use crate::CatalogError;

/// Parameter names allowed in torus entries, in the order they are numbered.
pub const PARAMETERS: [&str; 3] = ["a", "b", "c"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    Nilpotent,
    SquareIntegrable,
    Coregular,
    NoCp,
    NoTorus,
}

impl Tag {
    pub fn as_str(self) -> &'static str {
        match self {
            Tag::Nilpotent => "nilpotent",
            Tag::SquareIntegrable => "sqi",
            Tag::Coregular => "coregular",
            Tag::NoCp => "no-cp",
            Tag::NoTorus => "no-torus",
        }
    }

    fn parse(s: &str) -> Option<Tag> {
        Some(match s {
            "nilpotent" => Tag::Nilpotent,
            "sqi" => Tag::SquareIntegrable,
            "coregular" => Tag::Coregular,
            "no-cp" => Tag::NoCp,
            "no-torus" => Tag::NoTorus,
            _ => return None,
        })
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What the catalog claims about an algebra. Polynomials live in the
/// variables of the algebra; named invariants are already substituted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExpectationSet {
    pub index: Option<usize>,
    /// Dimension of a maximal torus of derivations; recorded, never checked.
    pub rank: Option<usize>,
    pub c: Option<usize>,
    /// Generators of the center of `U(g)` (through symmetrization).
    pub center: Vec<Polynomial>,
    /// Generators of the semicenter when they are not all invariants.
    pub semicenter: Vec<Polynomial>,
    pub invariants: Vec<(String, Polynomial)>,
    /// Each relation, already evaluated; it must be the zero polynomial.
    pub relations: Vec<(String, Polynomial)>,
    pub semiradical: Option<Vec<Vector>>,
    pub cpi: Option<Vec<Vector>>,
    /// Expected determinant of the extension's bracket matrix, in the
    /// variables of `g`.
    pub delta: Option<Polynomial>,
}

impl ExpectationSet {
    /// The generator list the pipeline is compared against.
    pub fn generators(&self) -> &[Polynomial] {
        if self.semicenter.is_empty() {
            &self.center
        } else {
            &self.semicenter
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: LieAlgebra,
    pub torus: Option<ParametricTorus>,
    pub tags: BTreeSet<Tag>,
    pub expect: ExpectationSet,
}

impl CatalogEntry {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn has(&self, tag: Tag) -> bool {
        self.tags.contains(&tag)
    }
}

pub fn load_file(path: &Path) -> Result<CatalogEntry, CatalogError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CatalogError::Io { path: path.display().to_string(), message: e.to_string() })?;
    load_entry(&text)
}

struct Line<'a> {
    number: usize,
    text: &'a str,
}

impl Line<'_> {
    fn err(&self, column: usize, msg: impl Into<String>) -> CatalogError {
        CatalogError::Parse { line: self.number, column, msg: msg.into() }
    }

    /// Column (1-based) of `part` inside this line.
    fn column_of(&self, part: &str) -> usize {
        part.as_ptr() as usize - self.text.as_ptr() as usize + 1
    }

    fn poly_err(&self, part: &str, e: PolyError) -> CatalogError {
        let base = self.column_of(part);
        match e {
            PolyError::Syntax { pos, msg } => self.err(base + pos, msg),
            PolyError::VariableOutOfRange { pos, index, nvars } => {
                self.err(base + pos, format!("variable x{index} out of range (dimension {nvars})"))
            }
            PolyError::UnknownName { pos, name } => self.err(base + pos, format!("unknown name '{name}'")),
            other => self.err(base, other.to_string()),
        }
    }
}

/// Splits `rest` at the top-level commas.
fn split_list(rest: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in rest.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&rest[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&rest[start..]);
    out
}

fn number(line: &Line, word: &str) -> Result<usize, CatalogError> {
    word.trim()
        .parse()
        .map_err(|_| line.err(line.column_of(word), format!("expected a number, found '{}'", word.trim())))
}

/// Whether `text` names a basis variable `x<k>`.
fn mentions_basis_variable(text: &str) -> bool {
    let b = text.as_bytes();
    (0..b.len()).any(|i| {
        b[i] == b'x' && b.get(i + 1).is_some_and(u8::is_ascii_digit) && (i == 0 || !b[i - 1].is_ascii_alphanumeric())
    })
}

fn linear_vector(p: &Polynomial, dim: usize) -> Option<Vector> {
    if !p.is_homogeneous() || p.total_degree() != Some(1) {
        return None;
    }
    let mut v = vec![exactpoly::Rational::zero(); dim];
    for (m, c) in p.terms() {
        v[m.max_var()?] = c.clone();
    }
    Some(v)
}

/// Parses one catalog entry. Later lines may use invariant names declared
/// on earlier lines.
pub fn load_entry(text: &str) -> Result<CatalogEntry, CatalogError> {
    let mut name: Option<String> = None;
    let mut dim: Option<usize> = None;
    let mut brackets: BTreeMap<(usize, usize), Vector> = BTreeMap::new();
    let mut torus_rows: Vec<(usize, Vec<Polynomial>)> = Vec::new();
    let mut tags = BTreeSet::new();
    let mut expect = ExpectationSet::default();
    let mut names: BTreeMap<String, Polynomial> = BTreeMap::new();

    for (k, raw) in text.lines().enumerate() {
        let line = Line { number: k + 1, text: raw };
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let (keyword, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed, ""));
        let rest = rest.trim();
        let need_dim = |line: &Line| dim.ok_or_else(|| line.err(1, "'dim' must come before this line"));
        let lookup = |names: &BTreeMap<String, Polynomial>| {
            let names = names.clone();
            move |s: &str| names.get(s).cloned()
        };
        match keyword {
            "algebra" => {
                if rest.is_empty() {
                    return Err(line.err(1, "missing algebra name"));
                }
                name = Some(rest.to_string());
            }
            "dim" => {
                let n = number(&line, rest)?;
                if n == 0 || n > 64 {
                    return Err(line.err(line.column_of(rest), "dimension must be between 1 and 64"));
                }
                dim = Some(n);
            }
            "bracket" => {
                let n = need_dim(&line)?;
                let (lhs, expr) =
                    rest.split_once("->").ok_or_else(|| line.err(line.column_of(rest), "expected 'i j -> expr'"))?;
                let idx: Vec<&str> = lhs.split_whitespace().collect();
                if idx.len() != 2 {
                    return Err(line.err(line.column_of(rest), "expected two basis indices before '->'"));
                }
                let (i, j) = (number(&line, idx[0])?, number(&line, idx[1])?);
                if i == 0 || j == 0 || i > n || j > n || i == j {
                    return Err(line.err(line.column_of(idx[0]), format!("bad index pair ({i}, {j})")));
                }
                let p = parse(expr, n).map_err(|e| line.poly_err(expr, e))?;
                let v = linear_vector(&p, n).ok_or_else(|| {
                    line.err(line.column_of(expr), "bracket value must be a linear combination of x1..xn")
                })?;
                let (key, v) =
                    if i < j { ((i - 1, j - 1), v) } else { ((j - 1, i - 1), v.into_iter().map(|c| -c).collect()) };
                if brackets.insert(key, v).is_some() {
                    return Err(line.err(1, format!("bracket [x{i}, x{j}] given twice")));
                }
            }
            "torus" => {
                let n = need_dim(&line)?;
                let inner = rest
                    .strip_prefix("diag(")
                    .and_then(|s| s.strip_suffix(')'))
                    .ok_or_else(|| line.err(line.column_of(rest), "expected 'diag(e1, ..., en)'"))?;
                let parts = split_list(inner);
                if parts.len() != n {
                    return Err(line.err(
                        line.column_of(rest),
                        format!("torus generator has {} entries, dimension is {n}", parts.len()),
                    ));
                }
                let mut row = Vec::with_capacity(n);
                for part in parts {
                    if mentions_basis_variable(part) {
                        return Err(line.err(line.column_of(part), "torus entries may only use the parameters a, b, c"));
                    }
                    let params =
                        |s: &str| PARAMETERS.iter().position(|&p| p == s).map(|v| Polynomial::var(v, PARAMETERS.len()));
                    let e = parse_with(part, PARAMETERS.len(), &params).map_err(|e| line.poly_err(part, e))?;
                    if e.total_degree().unwrap_or(0) > 1 {
                        return Err(line.err(line.column_of(part), "torus entries must be affine in the parameters"));
                    }
                    row.push(e);
                }
                torus_rows.push((line.number, row));
            }
            "tag" => {
                let tag =
                    Tag::parse(rest).ok_or_else(|| line.err(line.column_of(rest), format!("unknown tag '{rest}'")))?;
                tags.insert(tag);
            }
            "expect" => {
                let n = need_dim(&line)?;
                let (what, body) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                let body = body.trim();
                let poly = |text: &str, names: &BTreeMap<String, Polynomial>| {
                    parse_with(text, n, &lookup(names)).map_err(|e| line.poly_err(text, e))
                };
                let linear_list = |names: &BTreeMap<String, Polynomial>| -> Result<Vec<Vector>, CatalogError> {
                    split_list(body)
                        .into_iter()
                        .map(|part| {
                            let p = poly(part, names)?;
                            linear_vector(&p, n)
                                .ok_or_else(|| line.err(line.column_of(part), "expected a linear expression"))
                        })
                        .collect()
                };
                match what {
                    "index" => expect.index = Some(number(&line, body)?),
                    "rank" => expect.rank = Some(number(&line, body)?),
                    "c" => expect.c = Some(number(&line, body)?),
                    "center" | "semicenter" => {
                        let list =
                            split_list(body).into_iter().map(|p| poly(p, &names)).collect::<Result<Vec<_>, _>>()?;
                        if list.iter().any(Polynomial::is_zero) {
                            return Err(line.err(line.column_of(body), "generators must be nonzero"));
                        }
                        if what == "center" {
                            expect.center = list;
                        } else {
                            expect.semicenter = list;
                        }
                    }
                    "invariant" => {
                        let (label, expr) = body
                            .split_once('=')
                            .ok_or_else(|| line.err(line.column_of(body), "expected 'name = expr'"))?;
                        let label = label.trim();
                        if label.is_empty() || !label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                            return Err(line.err(line.column_of(body), "bad invariant name"));
                        }
                        if label.starts_with('x') && label[1..].chars().all(|c| c.is_ascii_digit()) {
                            return Err(
                                line.err(line.column_of(body), "invariant names must not look like basis variables")
                            );
                        }
                        if names.contains_key(label) {
                            return Err(line.err(line.column_of(body), format!("invariant '{label}' declared twice")));
                        }
                        let p = poly(expr, &names)?;
                        names.insert(label.to_string(), p.clone());
                        expect.invariants.push((label.to_string(), p));
                    }
                    "relation" => {
                        let (expr, zero) = body
                            .rsplit_once('=')
                            .ok_or_else(|| line.err(line.column_of(body), "expected 'expr = 0'"))?;
                        if zero.trim() != "0" {
                            return Err(line.err(line.column_of(zero), "relations must be written as 'expr = 0'"));
                        }
                        let p = poly(expr, &names)?;
                        expect.relations.push((expr.trim().to_string(), p));
                    }
                    "semiradical" => expect.semiradical = Some(linear_list(&names)?),
                    "cpi" => expect.cpi = Some(linear_list(&names)?),
                    "delta" => expect.delta = Some(poly(body, &names)?),
                    other => return Err(line.err(line.column_of(what), format!("unknown expectation '{other}'"))),
                }
            }
            other => return Err(line.err(1, format!("unknown keyword '{other}'"))),
        }
    }

    let name = name.ok_or(CatalogError::Missing("algebra"))?;
    let dim = dim.ok_or(CatalogError::Missing("dim"))?;
    let algebra = LieAlgebra::from_brackets(&name, dim, brackets.into_iter().map(|((i, j), v)| (i, j, v)))?;
    if let Err(violation) = algebra.validate() {
        return Err(CatalogError::Jacobi { name, violation });
    }
    if tags.contains(&Tag::NoCp) && expect.cpi.is_some() {
        return Err(CatalogError::Inconsistent(format!("{name}: both 'tag no-cp' and 'expect cpi'")));
    }
    let torus = if torus_rows.is_empty() { None } else { Some(compact_parameters(torus_rows)?) };
    Ok(CatalogEntry { name, algebra, torus, tags, expect })
}

/// Renumbers the parameters so that only those actually used remain.
fn compact_parameters(rows: Vec<(usize, Vec<Polynomial>)>) -> Result<ParametricTorus, CatalogError> {
    let used: BTreeSet<usize> = rows.iter().flat_map(|(_, row)| row.iter().flat_map(|e| e.variables())).collect();
    let used: Vec<usize> = used.into_iter().collect();
    let params = used.iter().map(|&v| PARAMETERS[v].to_string()).collect();
    let generators = rows
        .into_iter()
        .map(|(_, row)| {
            row.into_iter()
                .map(|e| e.reindex(|v| used.iter().position(|&u| u == v).expect("collected above"), used.len()))
                .collect()
        })
        .collect();
    Ok(ParametricTorus::new(params, generators)?)
}
