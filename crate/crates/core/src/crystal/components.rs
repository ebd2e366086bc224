//! Connected components of `B^⊗n`, the tableau crystals `B(λ)` and the
//! identification of components with tableau crystals.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use serde_json::json;

use super::{e_op, eps, f_op, p_symbol_of_word, q_symbol_of_word, tableau_reading_embedding, CrystalWord};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::tableaux::{semistandard_tableaux, Shape, Tableau};

/// Upper bound on `r^n` for whole-crystal computations.
pub const MAX_WORDS: usize = 1 << 20;

/// `r^n`, if nonzero and within [`MAX_WORDS`].
fn word_count(n: usize, r: u32) -> Result<usize> {
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    if r == 0 {
        return Err(Error::LetterOutOfRange { letter: 1, rank: 0 });
    }
    (r as usize)
        .checked_pow(n as u32)
        .filter(|&c| c <= MAX_WORDS)
        .ok_or(Error::TooManyWords { n, r, max: MAX_WORDS })
}

/// All `r^n` words in lexicographic order.
pub fn words(n: usize, r: u32) -> Result<Vec<CrystalWord>> {
    let count = word_count(n, r)?;
    let mut out = Vec::with_capacity(count);
    let mut cur = vec![1u32; n];
    loop {
        out.push(CrystalWord::from_vec_unchecked(cur.clone(), r));
        let Some(pos) = cur.iter().rposition(|&l| l < r) else {
            return Ok(out);
        };
        cur[pos] += 1;
        for l in &mut cur[pos + 1..] {
            *l = 1;
        }
    }
}

/// Every `e~_i` annihilates `b`.
pub fn is_highest_weight(b: &CrystalWord) -> bool {
    (1..b.rank() as usize).all(|i| eps(i, b).expect("index in range") == 0)
}

fn neighbours(b: &CrystalWord) -> impl Iterator<Item = CrystalWord> + '_ {
    (1..b.rank() as usize).flat_map(move |i| {
        let f = f_op(i, b).expect("index in range");
        let e = e_op(i, b).expect("index in range");
        f.into_iter().chain(e)
    })
}

/// Closure of `{b}` under all `e~_i` and `f~_i`.
pub fn component(b: &CrystalWord) -> BTreeSet<CrystalWord> {
    let mut seen = BTreeSet::from([b.clone()]);
    let mut queue = VecDeque::from([b.clone()]);
    while let Some(x) = queue.pop_front() {
        for y in neighbours(&x) {
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Components of `B^⊗n`, each sorted, ordered by least member.
fn raw_components(n: usize, r: u32) -> Result<Vec<Vec<CrystalWord>>> {
    let all = words(n, r)?;
    let mut seen: HashSet<CrystalWord> = HashSet::with_capacity(all.len());
    let mut out = Vec::new();
    for b in all {
        if seen.contains(&b) {
            continue;
        }
        let comp: Vec<CrystalWord> = component(&b).into_iter().collect();
        for x in &comp {
            seen.insert(x.clone());
        }
        out.push(comp);
    }
    Ok(out)
}

/// A connected component of `B^⊗n` labelled by the common recording
/// tableau of its words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Sorted; the first word is the component's label.
    pub words: Vec<CrystalWord>,
    pub highest_weight: CrystalWord,
    pub q: Tableau,
    pub shape: Shape,
}

impl Component {
    pub fn label(&self) -> &CrystalWord {
        &self.words[0]
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "label": self.label(),
            "highest_weight": self.highest_weight,
            "shape": self.shape,
            "q": self.q,
            "words": self.words,
        })
    }
}

/// Splits all `r^n` words into components and labels each with the
/// recording tableau of its words, which must be constant on it.
pub fn decompose(n: usize, r: u32) -> Result<Vec<Component>> {
    raw_components(n, r)?
        .into_iter()
        .map(|words| {
            let q = q_symbol_of_word(&words[0]);
            if let Some(bad) = words.iter().find(|b| q_symbol_of_word(b) != q) {
                return Err(Error::RecordingNotConstant(bad.to_string()));
            }
            let highest: Vec<&CrystalWord> = words.iter().filter(|b| is_highest_weight(b)).collect();
            assert_eq!(
                highest.len(),
                1,
                "component of {} has one highest weight",
                words[0]
            );
            Ok(Component {
                highest_weight: highest[0].clone(),
                shape: q.shape(),
                q,
                words,
            })
        })
        .collect()
}

/// The tableau of the given shape whose reading word (bottom row first) is
/// `letters`.
pub fn refill(shape: &Shape, letters: &[u32]) -> Result<Tableau> {
    if shape.size() != letters.len() {
        return Err(Error::InvalidTableau(format!(
            "{} letters do not fill shape {shape}",
            letters.len()
        )));
    }
    let mut rest = letters;
    let mut rows = vec![Vec::new(); shape.num_rows()];
    for (x, &len) in shape.rows().iter().enumerate().rev() {
        rows[x] = rest[..len].to_vec();
        rest = &rest[len..];
    }
    Tableau::new(rows)
}

/// Crystal graph of `B^⊗n`: vertices are words in lexicographic order,
/// edges `(b, i, f~_i b)`.
#[derive(Debug, Clone)]
pub struct CrystalGraph {
    pub words: Vec<CrystalWord>,
    pub edges: Vec<(usize, usize, usize)>,
}

pub fn crystal_graph(n: usize, r: u32) -> Result<CrystalGraph> {
    let words = words(n, r)?;
    let index: HashMap<&CrystalWord, usize> = words.iter().enumerate().map(|(k, b)| (b, k)).collect();
    let mut edges = Vec::new();
    for (k, b) in words.iter().enumerate() {
        for i in 1..r as usize {
            if let Some(fb) = f_op(i, b)? {
                edges.push((k, i, index[&fb]));
            }
        }
    }
    Ok(CrystalGraph { words, edges })
}

impl CrystalGraph {
    /// Graphviz rendering with edges labelled `f<i>`.
    pub fn to_dot(&self) -> String {
        let name = |b: &CrystalWord| {
            let parts: Vec<String> = b.letters().iter().map(u32::to_string).collect();
            parts.join(",")
        };
        let mut out = String::from("digraph crystal {\n");
        for b in &self.words {
            out.push_str(&format!("  \"{}\";\n", name(b)));
        }
        for &(from, i, to) in &self.edges {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"f{i}\"];\n",
                name(&self.words[from]),
                name(&self.words[to])
            ));
        }
        out.push_str("}\n");
        out
    }

    /// `{"kind": "crystal", "vertices": [[...]], "edges": [{"from","to","i"}]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(from, i, to)| json!({"from": self.words[from], "to": self.words[to], "i": i}))
            .collect();
        json!({"kind": "crystal", "vertices": self.words, "edges": edges})
    }
}

/// For every component of `B^⊗n` (rank `r`):
/// (a) the recording tableau is constant;
/// (b) `b -> P(b)` is a bijection onto the column-strict tableaux of the
///     component's shape with entries `<= r`;
/// (c) `P(f~_i b)` is `f~_i` applied to the reading word of `P(b)` and
///     refilled into the shape (null exactly when `f~_i b` is null), and
///     likewise for `e~_i`.
pub fn verify_djm(n: usize, r: u32) -> Result<Report> {
    word_count(n, r)?;
    let mut tableaux_by_shape: BTreeMap<Shape, BTreeSet<Tableau>> = BTreeMap::new();
    Ok(Report::run("crystal-djm", n, |report| {
        let comps = raw_components(n, r).expect("size checked");
        for words in &comps {
            let label = &words[0];
            let q = q_symbol_of_word(label);
            for b in words {
                let qb = q_symbol_of_word(b);
                report.check(qb == q, || {
                    format!("component of {label}: Q({b}) = {qb} differs from {q}")
                });
            }
            let shape = q.shape();
            let target = tableaux_by_shape
                .entry(shape.clone())
                .or_insert_with(|| semistandard_tableaux(&shape, r).into_iter().collect());
            let image: BTreeSet<Tableau> = words.iter().map(p_symbol_of_word).collect();
            report.check(image.len() == words.len(), || {
                format!("component of {label}: b -> P(b) is not injective")
            });
            report.check(&image == target, || {
                format!(
                    "component of {label}: image has {} tableaux, B{shape} has {}",
                    image.len(),
                    target.len()
                )
            });
            for b in words {
                let pb = p_symbol_of_word(b);
                let read = tableau_reading_embedding(&pb, r).expect("P(b) is column strict");
                for i in 1..r as usize {
                    for (name, op) in [("f", f_op as fn(usize, &CrystalWord) -> Result<_>), ("e", e_op)] {
                        let moved = op(i, b).expect("index in range");
                        let inside = op(i, &read).expect("index in range");
                        let ok = match (&moved, &inside) {
                            (None, None) => true,
                            (Some(x), Some(y)) => match refill(&shape, y.letters()) {
                                Ok(t) => t.is_column_strict() && t == p_symbol_of_word(x),
                                Err(_) => false,
                            },
                            _ => false,
                        };
                        report.check(ok, || {
                            format!(
                                "{name}{i} does not intertwine at {b}: word gives {}, B{shape} gives {}",
                                moved
                                    .as_ref()
                                    .map_or("null".into(), |x| p_symbol_of_word(x).to_string()),
                                inside.as_ref().map_or("null".into(), |y| y.to_string())
                            )
                        });
                    }
                }
            }
        }
        report.note(format!(
            "r={r}, {} words, {} components",
            r.pow(n as u32),
            comps.len()
        ));
    }))
}
