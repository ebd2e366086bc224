//! Kazhdan–Lusztig polynomials `P_{y,w}` and the `mu` coefficients, with a
//! concurrent memo table that can be persisted to disk.

use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use dashmap::DashMap;
use rayon::prelude::*;

use super::poly::IntPolynomial;
use crate::error::{Error, Result};
use crate::symgroup::{Permutation, Side, SymmetricGroup, DEFAULT_MAX_DEGREE};

/// Computes and memoises `P_{y,w}` for one `S_n`.
///
/// The recursion strips a descent of `w` on the engine's side (left by
/// default). Only pairs with `y < w` and `y` already normalised (every
/// descent of `w` is a descent of `y`) are stored; every other pair reduces
/// to one of those or to `0`/`1`. The tables are safe to share between
/// threads.
pub struct KlEngine {
    group: SymmetricGroup,
    side: Side,
    polys: DashMap<(u32, u32), IntPolynomial>,
    mus: DashMap<u32, Arc<[(u32, i64)]>>,
}

impl KlEngine {
    /// Left-descent recursion for `S_n`, `n <= 8`.
    pub fn new(n: usize) -> Result<Self> {
        Self::with_options(n, Side::Left, DEFAULT_MAX_DEGREE)
    }

    pub fn with_options(n: usize, side: Side, max_n: usize) -> Result<Self> {
        Ok(KlEngine {
            group: SymmetricGroup::with_limit(n, max_n)?,
            side,
            polys: DashMap::new(),
            mus: DashMap::new(),
        })
    }

    pub fn group(&self) -> &SymmetricGroup {
        &self.group
    }

    pub fn n(&self) -> usize {
        self.group.n()
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// Number of stored polynomials.
    pub fn cached_len(&self) -> usize {
        self.polys.len()
    }

    pub fn clear(&self) {
        self.polys.clear();
        self.mus.clear();
    }

    /// `P_{y,w}`; zero unless `y <= w`.
    pub fn kl_polynomial(&self, y: &Permutation, w: &Permutation) -> Result<IntPolynomial> {
        let (y, w) = self.indices(y, w)?;
        Ok(self.poly(y, w))
    }

    /// `mu(y, w)`: the coefficient of `q^((l(w)-l(y)-1)/2)` in `P_{y,w}`
    /// when `y < w` and the exponent is an integer, zero otherwise.
    pub fn mu(&self, y: &Permutation, w: &Permutation) -> Result<i64> {
        let (y, w) = self.indices(y, w)?;
        Ok(self.mu_idx(y, w))
    }

    /// `mu(y|w)`: `mu(y, w)` or `mu(w, y)`, whichever pair is ordered.
    pub fn mu_sym(&self, y: &Permutation, w: &Permutation) -> Result<i64> {
        let (y, w) = self.indices(y, w)?;
        Ok(self.mu_sym_idx(y, w))
    }

    /// `{z < w : mu(z, w) != 0}` with the values, sorted by `z`.
    pub fn mu_list(&self, w: &Permutation) -> Result<Vec<(Permutation, i64)>> {
        let w = self.group.index_of(w)?;
        Ok(self
            .mu_list_idx(w)
            .iter()
            .map(|&(z, m)| (self.group.element(z as usize).clone(), m))
            .collect())
    }

    fn indices(&self, y: &Permutation, w: &Permutation) -> Result<(usize, usize)> {
        Ok((self.group.index_of(y)?, self.group.index_of(w)?))
    }

    /// Replaces `y` by `s y` while some descent `s` of `w` is not a descent
    /// of `y`; `P_{y,w}` is unchanged.
    pub fn normalize_idx(&self, mut y: usize, w: usize) -> usize {
        let dw = self.group.descents(w, self.side);
        loop {
            let missing = dw.difference(self.group.descents(y, self.side));
            match missing.iter().next() {
                Some(i) => y = self.group.mul(self.side, i, y),
                None => return y,
            }
        }
    }

    pub fn poly(&self, y: usize, w: usize) -> IntPolynomial {
        if !self.group.bruhat_leq(y, w) {
            return IntPolynomial::zero();
        }
        let y = self.normalize_idx(y, w);
        if y == w {
            return IntPolynomial::one();
        }
        let key = (y as u32, w as u32);
        let cached = self.polys.get(&key).map(|p| p.clone());
        if let Some(p) = cached {
            return p;
        }
        let i = self
            .group
            .descents(w, self.side)
            .iter()
            .next()
            .expect("w is not the identity");
        let p = self.step(y, w, i);
        self.polys.entry(key).or_insert(p).clone()
    }

    /// Right-hand side of the recursion for `P_{y,w}` using the descent
    /// `s = s_i` of `w`, `v = s w`, `c = 1` if `s y < y`:
    /// `q^(1-c) P_{sy,v} + q^c P_{y,v} - sum mu(z,v) q^((l(w)-l(z))/2) P_{y,z}`
    /// over `z < v` with `s z < z`. Any descent gives the same answer.
    pub fn recursion_step(&self, y: &Permutation, w: &Permutation, i: usize) -> Result<IntPolynomial> {
        let (y, w) = self.indices(y, w)?;
        if i == 0 || i >= self.n() || !self.group.descents(w, self.side).contains(i) {
            return Err(Error::ReflectionOutOfRange {
                index: i,
                n: self.n(),
            });
        }
        if !self.group.bruhat_leq(y, w) {
            return Ok(IntPolynomial::zero());
        }
        Ok(self.step(y, w, i))
    }

    fn step(&self, y: usize, w: usize, i: usize) -> IntPolynomial {
        let g = &self.group;
        let v = g.mul(self.side, i, w);
        let sy = g.mul(self.side, i, y);
        let c = g.descents(y, self.side).contains(i);
        let (a, b) = (self.poly(sy, v), self.poly(y, v));
        let mut p = if c { &a + &b.shift(1) } else { &a.shift(1) + &b };
        let lw = g.length(w);
        for &(z, m) in self.mu_list_idx(v).iter() {
            let z = z as usize;
            if g.descents(z, self.side).contains(i) && g.bruhat_leq(y, z) {
                p -= &self.poly(y, z).scale(m).shift((lw - g.length(z)) / 2);
            }
        }
        p
    }

    pub fn mu_idx(&self, y: usize, w: usize) -> i64 {
        let (ly, lw) = (self.group.length(y), self.group.length(w));
        if ly >= lw || (lw - ly) % 2 == 0 {
            return 0;
        }
        self.poly(y, w).coeff((lw - ly - 1) / 2)
    }

    pub fn mu_sym_idx(&self, y: usize, w: usize) -> i64 {
        if self.group.length(y) < self.group.length(w) {
            self.mu_idx(y, w)
        } else {
            self.mu_idx(w, y)
        }
    }

    pub fn mu_list_idx(&self, w: usize) -> Arc<[(u32, i64)]> {
        let cached = self.mus.get(&(w as u32)).map(|l| Arc::clone(&l));
        if let Some(list) = cached {
            return list;
        }
        let lw = self.group.length(w);
        let list: Arc<[(u32, i64)]> = (0..self.group.order())
            .filter(|&z| {
                let lz = self.group.length(z);
                lz < lw && (lw - lz) % 2 == 1 && self.group.bruhat_leq(z, w)
            })
            .filter_map(|z| {
                let m = self.mu_idx(z, w);
                (m != 0).then_some((z as u32, m))
            })
            .collect();
        Arc::clone(self.mus.entry(w as u32).or_insert(list).value())
    }

    /// Fills every `mu` list (and with it every needed polynomial), in
    /// parallel and in increasing length of `w`.
    pub fn warm(&self) {
        let mut by_length: Vec<Vec<usize>> = Vec::new();
        for w in 0..self.group.order() {
            let l = self.group.length(w);
            if by_length.len() <= l {
                by_length.resize(l + 1, Vec::new());
            }
            by_length[l].push(w);
        }
        for layer in by_length {
            layer.par_iter().for_each(|&w| {
                self.mu_list_idx(w);
            });
        }
    }

    /// Computes `P_{y,w}` for every pair (normalised pairs are stored).
    pub fn warm_all_pairs(&self) {
        self.warm();
        let order = self.group.order();
        (0..order).into_par_iter().for_each(|w| {
            for y in 0..order {
                self.poly(y, w);
            }
        });
    }

    /// Stored entries `(y, w, P_{y,w})`, sorted by `(y, w)`.
    pub fn entries(&self) -> Vec<(Permutation, Permutation, IntPolynomial)> {
        let mut raw: Vec<((u32, u32), IntPolynomial)> =
            self.polys.iter().map(|e| (*e.key(), e.value().clone())).collect();
        raw.sort_by_key(|(k, _)| *k);
        raw.into_iter()
            .map(|((y, w), p)| {
                (
                    self.group.element(y as usize).clone(),
                    self.group.element(w as usize).clone(),
                    p,
                )
            })
            .collect()
    }

    /// Writes the stored polynomials as `y<TAB>w<TAB>c0,c1,...` lines,
    /// sorted. Returns the number of entries.
    pub fn save(&self, path: &Path) -> Result<usize> {
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent)?;
        }
        let entries = self.entries();
        let tmp = path.with_extension("tsv.tmp");
        {
            let mut out = BufWriter::new(fs::File::create(&tmp)?);
            for (y, w, p) in &entries {
                writeln!(out, "{y}\t{w}\t{}", p.to_csv())?;
            }
            out.flush()?;
        }
        fs::rename(&tmp, path)?;
        Ok(entries.len())
    }

    /// Loads entries written by [`KlEngine::save`]. A malformed line is an
    /// error and leaves the table unchanged. Returns the number of entries.
    pub fn load(&self, path: &Path) -> Result<usize> {
        let file = BufReader::new(fs::File::open(path)?);
        let mut parsed = Vec::new();
        for (k, line) in file.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let bad = |reason: &str| Error::CacheFormat {
                path: path.to_path_buf(),
                line: k + 1,
                reason: reason.to_string(),
            };
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 3 {
                return Err(bad("expected three tab-separated fields"));
            }
            let y: Permutation = fields[0].parse().map_err(|_| bad("bad permutation"))?;
            let w: Permutation = fields[1].parse().map_err(|_| bad("bad permutation"))?;
            if y.n() != self.n() || w.n() != self.n() {
                return Err(bad("permutation of the wrong degree"));
            }
            let p = IntPolynomial::from_csv(fields[2]).ok_or_else(|| bad("bad coefficients"))?;
            if p.coeff(0) != 1 {
                return Err(bad("constant term must be 1"));
            }
            let (yi, wi) = (y.rank(), w.rank());
            if yi == wi || !self.group.bruhat_leq(yi, wi) {
                return Err(bad("pair is not y < w in Bruhat order"));
            }
            parsed.push(((yi as u32, wi as u32), p));
        }
        let count = parsed.len();
        for (key, p) in parsed {
            self.polys.insert(key, p);
        }
        Ok(count)
    }
}

/// File name of the persisted table for `S_n`.
pub fn cache_file_name(n: usize, side: Side) -> String {
    match side {
        Side::Left => format!("kl-S{n}.tsv"),
        Side::Right => format!("kl-S{n}-right.tsv"),
    }
}

pub fn cache_path(dir: &Path, n: usize, side: Side) -> PathBuf {
    dir.join(cache_file_name(n, side))
}

/// One-off `P_{y,w}` with a fresh engine.
pub fn kl_polynomial(y: &Permutation, w: &Permutation) -> Result<IntPolynomial> {
    if y.n() != w.n() {
        return Err(Error::DegreeMismatch {
            left: y.n(),
            right: w.n(),
        });
    }
    KlEngine::new(w.n())?.kl_polynomial(y, w)
}

/// One-off `mu(y, w)` with a fresh engine.
pub fn mu(y: &Permutation, w: &Permutation) -> Result<i64> {
    if y.n() != w.n() {
        return Err(Error::DegreeMismatch {
            left: y.n(),
            right: w.n(),
        });
    }
    KlEngine::new(w.n())?.mu(y, w)
}
