//! Majority-voting decoding of primary codes `C(G, I)`.
//!
//! The code is rewritten as `C^perp(H, complement(I))` with `H = dualize(G)`.
//! Syndromes `s_l = h_l . e` are known for `l` in the complement; the others
//! are found in increasing order of `l` by letting candidate WB pairs `(i, j)`
//! of `(H, U)` with `rho_H(h_i * u_j) = l` vote.
//!
//! Candidate tests use a rank profile of the syndrome matrix
//! `S = (s_vw)`, `s_vw = (h_v * u_w) . e`, that is extended incrementally: row `a`
//! is kept as a combination `lambda_a` of the original rows, reduced against
//! earlier rows column by column until it gets a pivot. Extensions only ever
//! touch entries inside the rectangle of a WB pair whose rho is the current
//! `l`, so every `s_vw` used is already determined by known syndromes. Each
//! `(row, column)` is reduced at most once and each `s_vw` costs `O(n)`, which
//! gives `O(n^3)` per received word.

use serde::{Deserialize, Serialize};

use crate::error::{DecodeFailure, Error, Result};
use crate::fqla::{axpy, dot};
use crate::gf::{Elem, Field};
use crate::wbcore::{
    build_wb_table, dualize, mu_row, translate_wb_table, BuildMode, IndexSet, IndexedBasis, Variant, WbStatus,
    WbTable,
};

/// Precomputed data shared by all decodes of one code.
#[derive(Clone, Debug)]
pub struct DecoderSetup {
    g: IndexedBasis,
    h: IndexedBasis,
    u: IndexedBasis,
    indices: IndexSet,
    known: IndexSet,
    table: WbTable,
    /// WB pairs of `(H, U)` grouped by rho, each group in lexicographic order.
    by_rho: Vec<Vec<(usize, usize)>>,
}

impl DecoderSetup {
    /// `u = None` means `U = G`. A supplied `table` describes `(G, U)` and is
    /// translated to `(H, U)`; it is trusted, not re-verified. Without one the
    /// `(H, U)` table is built exhaustively, which costs `O(n^4)`.
    pub fn new(g: IndexedBasis, u: Option<IndexedBasis>, indices: IndexSet, table: Option<&WbTable>) -> Result<Self> {
        let n = g.len();
        let u = u.unwrap_or_else(|| g.clone());
        if u.field() != g.field() {
            return Err(Error::FieldMismatch);
        }
        if u.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: u.len() });
        }
        if indices.n() != n {
            return Err(Error::DimensionMismatch { expected: n, got: indices.n() });
        }
        indices.non_empty()?;
        let h = dualize(&g);
        let table = match table {
            Some(t) => translate_wb_table(t, &g, &h)?,
            None => build_wb_table(&h, &u, BuildMode::Exhaustive)?,
        };
        Ok(Self::assemble(g, h, u, indices, table))
    }

    /// Uses a table that already describes `(H, U)`.
    pub fn with_dual_table(g: IndexedBasis, u: Option<IndexedBasis>, indices: IndexSet, table: WbTable) -> Result<Self> {
        let n = g.len();
        let u = u.unwrap_or_else(|| g.clone());
        if u.field() != g.field() {
            return Err(Error::FieldMismatch);
        }
        for got in [u.len(), indices.n(), table.n()] {
            if got != n {
                return Err(Error::DimensionMismatch { expected: n, got });
            }
        }
        indices.non_empty()?;
        let h = dualize(&g);
        Ok(Self::assemble(g, h, u, indices, table))
    }

    fn assemble(g: IndexedBasis, h: IndexedBasis, u: IndexedBasis, indices: IndexSet, table: WbTable) -> Self {
        let n = g.len();
        let mut by_rho = vec![Vec::new(); n + 1];
        for ((i, j), e) in table.iter() {
            if e.status == WbStatus::Wb && e.rho >= 1 {
                by_rho[e.rho].push((i, j));
            }
        }
        let known = indices.complement();
        DecoderSetup { g, h, u, indices, known, table, by_rho }
    }

    pub fn field(&self) -> &Field {
        self.g.field()
    }

    pub fn len(&self) -> usize {
        self.g.len()
    }

    pub fn is_empty(&self) -> bool {
        self.g.is_empty()
    }

    pub fn g(&self) -> &IndexedBasis {
        &self.g
    }

    pub fn h(&self) -> &IndexedBasis {
        &self.h
    }

    pub fn u(&self) -> &IndexedBasis {
        &self.u
    }

    pub fn indices(&self) -> &IndexSet {
        &self.indices
    }

    /// Indices `l` whose syndrome is read off the received word.
    pub fn known_indices(&self) -> &IndexSet {
        &self.known
    }

    /// The WB table over `(H, U)` used for voting.
    pub fn table(&self) -> &WbTable {
        &self.table
    }

    /// `min mu(l)` over the syndromes that must be voted on, from the WB
    /// pairs in the table.
    pub fn designed_distance(&self) -> usize {
        let mu = mu_row(&self.table, Variant::Wb);
        self.known.others().iter().map(|&l| mu[l - 1]).min().unwrap_or(0)
    }

    /// Number of errors that are always corrected, or `None` when the
    /// designed distance is 0 and not even an error-free word is guaranteed.
    pub fn radius(&self) -> Option<usize> {
        self.designed_distance().checked_sub(1).map(|d| d / 2)
    }

    pub fn init_syndromes(&self, r: &[Elem]) -> Result<DecoderState<'_>> {
        DecoderState::new(self, r)
    }
}

/// One voting round.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Round {
    pub l: usize,
    pub candidates: Vec<(usize, usize)>,
    /// Vote of each candidate, in the same order.
    pub votes: Vec<Elem>,
    /// `(value, count)` sorted by decreasing count, then value.
    pub tally: Vec<(Elem, usize)>,
    pub chosen: Option<Elem>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transcript {
    /// `s_l` for `l = 1..=n` as known before voting.
    pub initial: Vec<Option<Elem>>,
    pub rounds: Vec<Round>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decoded {
    pub error: Vec<Elem>,
    pub codeword: Vec<Elem>,
    pub syndromes: Vec<Elem>,
    pub transcript: Transcript,
}

#[derive(Clone, Debug)]
struct RowState {
    /// Coefficients over original rows `1..=a` (0-based, `lambda[a-1] = 1`).
    lambda: Vec<Elem>,
    /// Columns `1..=frontier` have been processed.
    frontier: usize,
    /// Pivot column and the reduced entry there.
    pivot: Option<(usize, Elem)>,
}

/// Per-word decoding state.
#[derive(Debug)]
pub struct DecoderState<'a> {
    setup: &'a DecoderSetup,
    received: Vec<Elem>,
    syndromes: Vec<Option<Elem>>,
    /// `sum s_k g_{n-k+1}` over known `k`; equals `e` once all are known.
    e_tilde: Vec<Elem>,
    cache: Vec<Option<Elem>>,
    rows: Vec<RowState>,
    col_pivot: Vec<Option<usize>>,
    transcript: Transcript,
}

impl<'a> DecoderState<'a> {
    fn new(setup: &'a DecoderSetup, r: &[Elem]) -> Result<Self> {
        let n = setup.len();
        if r.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: r.len() });
        }
        let f = setup.field();
        let mut state = DecoderState {
            setup,
            received: r.to_vec(),
            syndromes: vec![None; n],
            e_tilde: vec![Elem::ZERO; n],
            cache: vec![None; n * n],
            rows: (1..=n)
                .map(|a| {
                    let mut lambda = vec![Elem::ZERO; a];
                    lambda[a - 1] = Elem::ONE;
                    RowState { lambda, frontier: 0, pivot: None }
                })
                .collect(),
            col_pivot: vec![None; n + 1],
            transcript: Transcript::default(),
        };
        for l in setup.known.iter() {
            let s = dot(f, setup.h.vector(l), r);
            state.set_syndrome(l, s);
        }
        state.transcript.initial = state.syndromes.clone();
        Ok(state)
    }

    fn set_syndrome(&mut self, l: usize, s: Elem) {
        let n = self.setup.len();
        self.syndromes[l - 1] = Some(s);
        if !s.is_zero() {
            axpy(self.setup.field(), &mut self.e_tilde, s, self.setup.g.vector(n - l + 1));
        }
    }

    pub fn syndromes(&self) -> &[Option<Elem>] {
        &self.syndromes
    }

    pub fn transcript(&self) -> &Transcript {
        &self.transcript
    }

    /// `(h_v * u_w) . e~`, where `e~` only involves known syndromes. This is
    /// the true `s_vw` whenever every `s_k` with `k <= rho_H(h_v * u_w)` is known.
    pub fn s_vw(&self, v: usize, w: usize) -> Elem {
        let f = self.setup.field();
        let (h, u) = (self.setup.h.vector(v), self.setup.u.vector(w));
        h.iter().zip(u).zip(&self.e_tilde).fold(Elem::ZERO, |acc, ((&a, &b), &e)| {
            if e.is_zero() {
                acc
            } else {
                f.add(acc, f.mul(f.mul(a, b), e))
            }
        })
    }

    fn cached(&mut self, v: usize, w: usize) -> Elem {
        let n = self.setup.len();
        let k = (v - 1) * n + (w - 1);
        if let Some(s) = self.cache[k] {
            return s;
        }
        let s = self.s_vw(v, w);
        self.cache[k] = Some(s);
        s
    }

    /// Reduces row `a` through column `c`, stopping early at its pivot.
    /// Rows `1..a` must already be processed through column `c`.
    fn extend_row(&mut self, a: usize, c: usize) {
        let f = self.setup.field().clone();
        while self.rows[a - 1].frontier < c && self.rows[a - 1].pivot.is_none() {
            let col = self.rows[a - 1].frontier + 1;
            let mut entry = Elem::ZERO;
            for t in 1..=a {
                let coef = self.rows[a - 1].lambda[t - 1];
                if !coef.is_zero() {
                    let s = self.cached(t, col);
                    entry = f.add(entry, f.mul(coef, s));
                }
            }
            if !entry.is_zero() {
                match self.col_pivot[col] {
                    Some(k) if k < a => {
                        let (_, pv) = self.rows[k - 1].pivot.expect("pivot row");
                        let mu = f.div(entry, pv).expect("pivot is nonzero");
                        let (head, tail) = self.rows.split_at_mut(a - 1);
                        axpy(&f, &mut tail[0].lambda[..k], f.neg(mu), &head[k - 1].lambda);
                    }
                    _ => {
                        self.rows[a - 1].pivot = Some((col, entry));
                        self.col_pivot[col] = Some(a);
                    }
                }
            }
            self.rows[a - 1].frontier = col;
        }
        self.rows[a - 1].frontier = self.rows[a - 1].frontier.max(c);
    }

    /// Prepares the rank profile for the pair `(i, j)`: rows `1..i-1`
    /// through column `j` and row `i` through column `j - 1`.
    fn prepare(&mut self, i: usize, j: usize) {
        for a in 1..i {
            self.extend_row(a, j);
        }
        self.extend_row(i, j - 1);
    }

    fn pivot_col(&self, a: usize) -> Option<usize> {
        self.rows[a - 1].pivot.map(|(c, _)| c)
    }

    fn is_candidate(&self, i: usize, j: usize) -> bool {
        let row_free = self.pivot_col(i).is_none_or(|c| c >= j);
        let col_free = self.col_pivot[j].is_none_or(|k| k >= i);
        row_free && col_free
    }

    fn check_prefix(&self, l: usize) -> Result<()> {
        let n = self.setup.len();
        if l == 0 || l > n {
            return Err(Error::IndexOutOfRange { index: l, n });
        }
        match (1..l).find(|&k| self.syndromes[k - 1].is_none()) {
            Some(k) => Err(Error::PrefixUnknown(k)),
            None => Ok(()),
        }
    }

    /// Candidate pairs for `s_l` in lexicographic order. Requires `s_k` known
    /// for all `k < l`.
    pub fn find_candidates(&mut self, l: usize) -> Result<Vec<(usize, usize)>> {
        self.check_prefix(l)?;
        let pairs = self.setup.by_rho[l].clone();
        let mut out = Vec::new();
        for (i, j) in pairs {
            self.prepare(i, j);
            if self.is_candidate(i, j) {
                out.push((i, j));
            }
        }
        Ok(out)
    }

    /// The value of `s_l` implied by candidate `(i, j)`.
    pub fn vote(&mut self, (i, j): (usize, usize), l: usize) -> Result<Elem> {
        self.check_prefix(l)?;
        let not_candidate = Error::NotCandidate { i, j, l };
        let n = self.setup.len();
        if i == 0 || j == 0 || i > n || j > n {
            return Err(not_candidate);
        }
        match self.setup.table.get(i, j) {
            Some(e) if e.status == WbStatus::Wb && e.rho == l => {}
            _ => return Err(not_candidate),
        }
        self.prepare(i, j);
        if !self.is_candidate(i, j) {
            return Err(not_candidate);
        }
        self.vote_unchecked(i, j, l)
    }

    fn vote_unchecked(&mut self, i: usize, j: usize, l: usize) -> Result<Elem> {
        let f = self.setup.field().clone();
        let n = self.setup.len();
        // s'_ij = -sum_{t<i} lambda_i[t] s_tj
        let mut s_prime = Elem::ZERO;
        for t in 1..i {
            let coef = self.rows[i - 1].lambda[t - 1];
            if !coef.is_zero() {
                let s = self.cached(t, j);
                s_prime = f.sub(s_prime, f.mul(coef, s));
            }
        }
        let prod: Vec<Elem> = self.setup.h.vector(i).iter().zip(self.setup.u.vector(j)).map(|(&a, &b)| f.mul(a, b)).collect();
        let c_l = dot(&f, &prod, self.setup.g.vector(n - l + 1));
        if c_l.is_zero() {
            return Err(Error::InvalidTable { i, j });
        }
        let rest = dot(&f, &prod, &self.e_tilde);
        f.div(f.sub(s_prime, rest), c_l)
    }

    /// Votes on the smallest unknown syndrome and records the round. Returns
    /// `Ok(None)` once every syndrome is known.
    pub fn step(&mut self) -> Result<Option<Round>> {
        let Some(l) = (1..=self.setup.len()).find(|&k| self.syndromes[k - 1].is_none()) else {
            return Ok(None);
        };
        let candidates = self.find_candidates(l)?;
        let mut votes = Vec::with_capacity(candidates.len());
        for &(i, j) in &candidates {
            votes.push(self.vote_unchecked(i, j, l)?);
        }
        let mut counts = vec![0usize; self.setup.field().order() as usize];
        for v in &votes {
            counts[v.value() as usize] += 1;
        }
        let f = self.setup.field();
        let mut tally: Vec<(Elem, usize)> = counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(v, &c)| (f.elem(v as u64).expect("value below q"), c))
            .collect();
        tally.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        let mut round = Round { l, candidates, votes, tally, chosen: None };
        let failure = match round.tally.as_slice() {
            [] => Some(DecodeFailure::NoCandidates { l }),
            [a, b, ..] if a.1 == b.1 => Some(DecodeFailure::TiedVote { l }),
            [top, ..] => {
                round.chosen = Some(top.0);
                None
            }
        };
        self.transcript.rounds.push(round.clone());
        if let Some(fail) = failure {
            return Err(Error::Decode(fail));
        }
        self.set_syndrome(l, round.chosen.expect("chosen"));
        Ok(Some(round))
    }

    /// Runs all rounds and returns the error, codeword and transcript.
    pub fn finish(mut self) -> Result<Decoded> {
        while self.step()?.is_some() {}
        let f = self.setup.field();
        let codeword = self.received.iter().zip(&self.e_tilde).map(|(&r, &e)| f.sub(r, e)).collect();
        Ok(Decoded {
            error: self.e_tilde,
            codeword,
            syndromes: self.syndromes.into_iter().map(|s| s.expect("all known")).collect(),
            transcript: self.transcript,
        })
    }
}

/// Decodes `r`; on failure the error carries the offending syndrome index.
pub fn decode(setup: &DecoderSetup, r: &[Elem]) -> Result<Decoded> {
    setup.init_syndromes(r)?.finish()
}
