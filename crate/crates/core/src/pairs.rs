//! T- and Y-systems attached to a pair of simply laced Dynkin diagrams.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use crate::laurent::LaurentPoly;
use crate::matrix::SkewMatrix;
use crate::report::Tally;
use crate::seed::{Coefficient, Seed};
use crate::semifield::{PosRational, TropMonomial};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DynkinType {
    A,
    D,
    E,
}

/// A simply laced Dynkin diagram with a bipartite sign `+`/`-` on its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinDiagram {
    pub kind: DynkinType,
    pub rank: usize,
    /// 0-based neighbour lists.
    pub adj: Vec<Vec<usize>>,
    /// `true` for `I_+`.
    pub plus: Vec<bool>,
}

impl DynkinDiagram {
    pub fn new(kind: DynkinType, rank: usize) -> Result<Self, Error> {
        let mut edges: Vec<(usize, usize)> = Vec::new();
        match (kind, rank) {
            (DynkinType::A, n) if n >= 1 => edges.extend((1..n).map(|i| (i - 1, i))),
            (DynkinType::D, n) if n >= 4 => {
                edges.extend((1..n - 1).map(|i| (i - 1, i)));
                edges.push((n - 3, n - 1));
            }
            // 1-3-4-5-6(-7-8) with 2 on 4
            (DynkinType::E, n) if (6..=8).contains(&n) => {
                edges.extend([(0, 2), (2, 3), (1, 3)]);
                edges.extend((4..n).map(|i| (i - 1, i)));
            }
            _ => return Err(Error::Config(format!("no diagram {kind:?}{rank}"))),
        }
        let mut adj = vec![Vec::new(); rank];
        for (a, b) in edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        // trees are bipartite; colour from vertex 0
        let mut plus = vec![None; rank];
        plus[0] = Some(true);
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if plus[w].is_none() {
                    plus[w] = Some(!plus[v].expect("set"));
                    stack.push(w);
                }
            }
        }
        let plus = plus.into_iter().map(|p| p.expect("connected")).collect();
        Ok(DynkinDiagram { kind, rank, adj, plus })
    }

    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        if i == j {
            2
        } else if self.adj[i].contains(&j) {
            -1
        } else {
            0
        }
    }

    pub fn coxeter_number(&self) -> i64 {
        let n = self.rank as i64;
        match self.kind {
            DynkinType::A => n + 1,
            DynkinType::D => 2 * n - 2,
            DynkinType::E => [12, 18, 30][self.rank - 6],
        }
    }

    /// The Dynkin automorphism for A_n, D_n (n odd) and E_6, the identity otherwise.
    pub fn omega(&self) -> Vec<usize> {
        let n = self.rank;
        let mut w: Vec<usize> = (0..n).collect();
        match self.kind {
            DynkinType::A => w.reverse(),
            DynkinType::D if n % 2 == 1 => w.swap(n - 2, n - 1),
            DynkinType::E if n == 6 => {
                w.swap(0, 5);
                w.swap(2, 4);
            }
            _ => {}
        }
        w
    }
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.kind, self.rank)
    }
}

impl FromStr for DynkinDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let kind = match s.chars().next() {
            Some('A' | 'a') => DynkinType::A,
            Some('D' | 'd') => DynkinType::D,
            Some('E' | 'e') => DynkinType::E,
            _ => return Err(Error::Parse(format!("bad diagram {s:?}"))),
        };
        let rank = s[1..].parse().map_err(|_| Error::Parse(format!("bad rank in {s:?}")))?;
        DynkinDiagram::new(kind, rank)
    }
}

/// The pair `(X, X')` on the vertex set `I × I'`, indexed `i * r' + i'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pair {
    pub x: DynkinDiagram,
    pub xp: DynkinDiagram,
}

impl Pair {
    pub fn new(x: DynkinDiagram, xp: DynkinDiagram) -> Self {
        Pair { x, xp }
    }

    /// Parses `X:X'`, e.g. `A3:A2`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let (a, b) = s.split_once(':').ok_or_else(|| Error::Parse(format!("pair {s:?} is not X:X'")))?;
        Ok(Pair::new(a.parse()?, b.parse()?))
    }

    pub fn size(&self) -> usize {
        self.x.rank * self.xp.rank
    }

    pub fn index(&self, i: usize, ip: usize) -> usize {
        i * self.xp.rank + ip
    }

    pub fn vertex(&self, v: usize) -> (usize, usize) {
        (v / self.xp.rank, v % self.xp.rank)
    }

    pub fn label(&self, v: usize) -> String {
        let (i, ip) = self.vertex(v);
        format!("({},{})", i + 1, ip + 1)
    }

    fn class(&self, v: usize) -> (bool, bool) {
        let (i, ip) = self.vertex(v);
        (self.x.plus[i], self.xp.plus[ip])
    }

    /// `0` for (++) and (--), `1` for (+-) and (-+): the parity of the times `u` at which `v` mutates.
    pub fn mutation_parity(&self, v: usize) -> i64 {
        let (a, b) = self.class(v);
        (a != b) as i64
    }

    pub fn is_mutated(&self, v: usize, u: i64) -> bool {
        u.rem_euclid(2) == self.mutation_parity(v)
    }

    pub fn batch(&self, u: i64) -> Vec<usize> {
        (0..self.size()).filter(|&v| self.is_mutated(v, u)).collect()
    }

    pub fn half_period(&self) -> i64 {
        self.x.coxeter_number() + self.xp.coxeter_number()
    }

    pub fn omega(&self) -> Vec<usize> {
        let (w, wp) = (self.x.omega(), self.xp.omega());
        (0..self.size())
            .map(|v| {
                let (i, ip) = self.vertex(v);
                self.index(w[i], wp[ip])
            })
            .collect()
    }

    pub fn matrix(&self) -> SkewMatrix {
        build_pair_matrix(&self.x, &self.xp)
    }

    /// `B` at even `u`, `-B` at odd `u`.
    pub fn matrix_at(&self, u: i64) -> SkewMatrix {
        let b = self.matrix();
        if u.rem_euclid(2) == 0 {
            b
        } else {
            b.neg()
        }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.x, self.xp)
    }
}

/// The exchange matrix of the pair.
pub fn build_pair_matrix(x: &DynkinDiagram, xp: &DynkinDiagram) -> SkewMatrix {
    let p = Pair::new(x.clone(), xp.clone());
    let n = p.size();
    let mut rows = vec![vec![0i64; n]; n];
    for v in 0..n {
        for w in 0..n {
            let ((i, ip), (j, jp)) = (p.vertex(v), p.vertex(w));
            let (cv, cw) = (p.class(v), p.class(w));
            let c = if ip == jp && i != j { x.cartan(i, j) } else { 0 };
            let cp = if i == j && ip != jp { xp.cartan(ip, jp) } else { 0 };
            const PP: (bool, bool) = (true, true);
            const PM: (bool, bool) = (true, false);
            const MP: (bool, bool) = (false, true);
            const MM: (bool, bool) = (false, false);
            rows[v][w] = match (cv, cw) {
                (MP, PP) | (PM, MM) => -c,
                (PP, MP) | (MM, PM) => c,
                (PP, PM) | (MM, MP) => -cp,
                (PM, PP) | (MP, MM) => cp,
                _ => 0,
            };
        }
    }
    SkewMatrix::from_rows(&rows).expect("the pair matrix is skew-symmetric")
}

/// Seeds of the pair schedule at `u = 0, ..., steps`.
#[derive(Clone, Debug)]
pub struct PairWalk<Y> {
    pub pair: Pair,
    seeds: Vec<Seed<Y>>,
}

impl<Y: Coefficient> PairWalk<Y> {
    pub fn run(pair: &Pair, initial: Seed<Y>, steps: i64) -> Result<Self, Error> {
        if initial.b != pair.matrix_at(0) {
            return Err(Error::ScheduleMismatch(0));
        }
        let mut seeds = vec![initial];
        for u in 0..steps {
            let next = seeds.last().expect("nonempty").mutate_batch(&pair.batch(u))?;
            if next.b != pair.matrix_at(u + 1) {
                return Err(Error::ScheduleMismatch(u + 1));
            }
            seeds.push(next);
        }
        Ok(PairWalk { pair: pair.clone(), seeds })
    }

    pub fn steps(&self) -> i64 {
        self.seeds.len() as i64 - 1
    }

    pub fn y(&self, v: usize, u: i64) -> Option<&Y> {
        usize::try_from(u).ok().and_then(|u| self.seeds.get(u)).map(|s| &s.y[v])
    }

    pub fn x(&self, v: usize, u: i64) -> Option<&LaurentPoly> {
        usize::try_from(u).ok().and_then(|u| self.seeds.get(u)).and_then(|s| s.x.as_ref()).map(|x| &x[v])
    }

    /// `Y_v(u)`: the coefficient at the times `v` mutates.
    pub fn y_value(&self, v: usize, u: i64) -> Option<&Y> {
        if self.pair.is_mutated(v, u) {
            self.y(v, u)
        } else {
            None
        }
    }

    /// `T_v(u)`: the cluster variable at the times `v` does not mutate.
    pub fn t_value(&self, v: usize, u: i64) -> Option<&LaurentPoly> {
        if self.pair.is_mutated(v, u) {
            None
        } else {
            self.x(v, u)
        }
    }
}

pub fn tropical_walk(pair: &Pair, steps: i64) -> Result<PairWalk<TropMonomial>, Error> {
    PairWalk::run(pair, Seed::tropical(pair.matrix()), steps)
}

pub fn trivial_walk(pair: &Pair, steps: i64) -> Result<PairWalk<crate::semifield::Trivial>, Error> {
    PairWalk::run(pair, Seed::trivial(pair.matrix()), steps)
}

pub fn rational_walk(pair: &Pair, y0: Vec<BigRational>, steps: i64) -> Result<PairWalk<PosRational>, Error> {
    let y = y0.into_iter().map(PosRational::new).collect::<Result<_, _>>()?;
    PairWalk::run(pair, Seed::coefficients(pair.matrix(), y)?, steps)
}

fn neighbours(pair: &Pair, v: usize) -> (Vec<usize>, Vec<usize>) {
    let (i, ip) = pair.vertex(v);
    let horiz = pair.x.adj[i].iter().map(|&j| pair.index(j, ip)).collect();
    let vert = pair.xp.adj[ip].iter().map(|&jp| pair.index(i, jp)).collect();
    (horiz, vert)
}

/// `Y(u-1) Y(u+1) = ∏(1 + Y_{ji'}(u)) / ∏(1 + Y_{ij'}(u)^{-1})` wherever all terms are in the walk.
pub fn check_y2<Y: Coefficient>(walk: &PairWalk<Y>) -> Tally {
    let pair = &walk.pair;
    let mut t = Tally::default();
    for v in 0..pair.size() {
        for u in 1..walk.steps() {
            if pair.is_mutated(v, u) {
                continue;
            }
            let (Some(a), Some(b)) = (walk.y_value(v, u - 1), walk.y_value(v, u + 1)) else {
                continue;
            };
            let one = a.one_like();
            let (horiz, vert) = neighbours(pair, v);
            let mut rhs = one.clone();
            for w in horiz {
                rhs = rhs.mul(&one.oplus(walk.y_value(w, u).expect("neighbour mutates at u")));
            }
            for w in vert {
                rhs = rhs.div(&one.oplus(&walk.y_value(w, u).expect("neighbour mutates at u").inv()));
            }
            t.record(a.mul(b) == rhs, || format!("Y-relation at {} u={u}", pair.label(v)));
        }
    }
    t
}

/// `T(u-1) T(u+1) = ∏ T_{ji'}(u) + ∏ T_{ij'}(u)` as Laurent polynomials.
pub fn check_t2<Y: Coefficient>(walk: &PairWalk<Y>) -> Tally {
    let pair = &walk.pair;
    let mut t = Tally::default();
    for v in 0..pair.size() {
        for u in 1..walk.steps() {
            if !pair.is_mutated(v, u) {
                continue;
            }
            let (Some(a), Some(b)) = (walk.t_value(v, u - 1), walk.t_value(v, u + 1)) else {
                continue;
            };
            let one = LaurentPoly::one(a.nvars());
            let (horiz, vert) = neighbours(pair, v);
            let prod = |ws: Vec<usize>| {
                ws.into_iter().fold(one.clone(), |acc, w| acc.mul(walk.t_value(w, u).expect("neighbour is frozen at u")))
            };
            let rhs = prod(horiz).add(&prod(vert));
            t.record(a.mul(b) == rhs, || format!("T-relation at {} u={u}", pair.label(v)));
        }
    }
    t
}

/// Half periodicity with `ω × ω'` and full periodicity `2(h + h')` for the
/// values `get(v, u)` over `0 <= u < 2(h + h')`.
fn periodicity<V: PartialEq>(pair: &Pair, steps: i64, get: impl Fn(usize, i64) -> Option<V>) -> Result<(Tally, Tally), Error> {
    let half = pair.half_period();
    if steps < 4 * half - 1 {
        return Err(Error::Config(format!("walk of {steps} steps is shorter than two periods")));
    }
    let w = pair.omega();
    let mut th = Tally::default();
    let mut tf = Tally::default();
    for u in 0..2 * half {
        for v in 0..pair.size() {
            let a = get(v, u);
            if a.is_none() {
                continue;
            }
            th.record(get(v, u + half) == get(w[v], u), || format!("half period at {} u={u}", pair.label(v)));
            tf.record(get(v, u + 2 * half) == a, || format!("full period at {} u={u}", pair.label(v)));
        }
    }
    Ok((th, tf))
}

/// Tropical periodicity of every coefficient, and `B(u + h + h') = ω(B(u))`.
pub fn check_pair_periodicity(walk: &PairWalk<TropMonomial>) -> Result<(Tally, Tally), Error> {
    let pair = &walk.pair;
    let (mut th, tf) = periodicity(pair, walk.steps(), |v, u| walk.y(v, u).cloned())?;
    for u in 0..2 {
        let lhs = pair.matrix_at(u + pair.half_period());
        let rhs = pair.matrix_at(u).apply_vertex_map(&pair.omega())?;
        th.record(lhs == rhs, || format!("B(u+h+h') != omega(B(u)) at u={u}"));
    }
    Ok((th, tf))
}

pub fn check_y_periodicity<Y: Coefficient>(walk: &PairWalk<Y>) -> Result<(Tally, Tally), Error> {
    periodicity(&walk.pair, walk.steps(), |v, u| walk.y_value(v, u).cloned())
}

pub fn check_t_periodicity<Y: Coefficient>(walk: &PairWalk<Y>) -> Result<(Tally, Tally), Error> {
    periodicity(&walk.pair, walk.steps(), |v, u| walk.t_value(v, u).cloned())
}
