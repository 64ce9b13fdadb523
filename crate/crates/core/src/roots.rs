//! The almost-positive-root model of the level-2 tropical Y-system of type
//! B_r: the piecewise-linear action σ on A_{2r-1}, its orbits, the bijection
//! ρ onto A_{2r-2}, and the t-vector correspondence.

use std::collections::BTreeSet;
use std::fmt;

use crate::br::BrConfig;
use crate::quiver::Sign;
use crate::report::Tally;
use crate::troplab::run_tropical;
use crate::Error;

/// A root of A_n written in the simple-root basis; labels are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlmostPositiveRoot {
    coeffs: Vec<i64>,
}

impl AlmostPositiveRoot {
    pub fn from_coeffs(coeffs: Vec<i64>) -> Result<Self, Error> {
        let a = AlmostPositiveRoot { coeffs };
        if a.is_positive() || a.negative_simple().is_some() {
            Ok(a)
        } else {
            Err(Error::Domain(format!("{:?} is not an almost positive root", a.coeffs)))
        }
    }

    pub fn simple(n: usize, i: usize) -> Self {
        Self::interval(n, i, i)
    }

    pub fn neg_simple(n: usize, i: usize) -> Self {
        let mut coeffs = vec![0; n];
        coeffs[i - 1] = -1;
        AlmostPositiveRoot { coeffs }
    }

    /// `[i,j] = α_i + ... + α_j`.
    pub fn interval(n: usize, i: usize, j: usize) -> Self {
        let mut coeffs = vec![0; n];
        for c in &mut coeffs[i - 1..j] {
            *c = 1;
        }
        AlmostPositiveRoot { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs[i - 1]
    }

    /// Support as 1-based labels.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.rank()).filter(|&i| self.coeff(i) != 0).collect()
    }

    /// A nonzero 0/1 vector with consecutive support.
    pub fn is_positive(&self) -> bool {
        let s = self.support();
        !s.is_empty()
            && s.iter().all(|&i| self.coeff(i) == 1)
            && s.last().expect("nonempty") - s[0] + 1 == s.len()
    }

    /// `Some(j)` when this is `-α_j`.
    pub fn negative_simple(&self) -> Option<usize> {
        match self.support().as_slice() {
            [j] if self.coeff(*j) == -1 => Some(*j),
            _ => None,
        }
    }
}

impl fmt::Display for AlmostPositiveRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(j) = self.negative_simple() {
            return write!(f, "-a{j}");
        }
        let s = self.support();
        match (s.first(), s.last()) {
            (Some(i), Some(j)) if i == j && self.coeff(*i) == 1 => write!(f, "[{i}]"),
            (Some(i), Some(j)) if s.iter().all(|&k| self.coeff(k) == 1) => write!(f, "[{i},{j}]"),
            _ => write!(f, "{:?}", self.coeffs),
        }
    }
}

/// Simply laced diagram given by neighbour lists on labels `1..=n`.
#[derive(Clone, Debug)]
struct Diagram {
    adj: Vec<Vec<usize>>,
}

impl Diagram {
    fn path(labels: &[usize], n: usize) -> Self {
        let mut adj = vec![Vec::new(); n + 1];
        for w in labels.windows(2) {
            adj[w[0]].push(w[1]);
            adj[w[1]].push(w[0]);
        }
        Diagram { adj }
    }

    fn reflect(&self, v: &[i64], i: usize) -> Vec<i64> {
        let pairing = 2 * v[i - 1] - self.adj[i].iter().map(|&j| v[j - 1]).sum::<i64>();
        let mut out = v.to_vec();
        out[i - 1] -= pairing;
        out
    }
}

/// The sign of vertex `i` of A_{2r-1}; `None` for the middle vertex `r`.
pub fn j_sign(r: usize, i: usize) -> Option<Sign> {
    let plus = match i.cmp(&r) {
        std::cmp::Ordering::Less => (r - i) % 2 == 0,
        std::cmp::Ordering::Greater => (i - r) % 2 == 1,
        std::cmp::Ordering::Equal => return None,
    };
    Some(if plus { Sign::Plus } else { Sign::Minus })
}

fn j_set(r: usize, s: Sign) -> Vec<usize> {
    (1..2 * r).filter(|&i| j_sign(r, i) == Some(s)).collect()
}

/// σ on the almost positive roots of A_{2r-1}.
#[derive(Clone, Debug)]
pub struct SigmaModel {
    pub r: usize,
    diagram: Diagram,
    plus: Vec<usize>,
    minus: Vec<usize>,
}

impl SigmaModel {
    pub fn new(r: usize) -> Result<Self, Error> {
        if r < 2 {
            return Err(Error::Config(format!("need r >= 2, got {r}")));
        }
        let n = 2 * r - 1;
        Ok(SigmaModel {
            r,
            diagram: Diagram::path(&(1..=n).collect::<Vec<_>>(), n),
            plus: j_set(r, Sign::Plus),
            minus: j_set(r, Sign::Minus),
        })
    }

    pub fn n(&self) -> usize {
        2 * self.r - 1
    }

    fn check(&self, a: &AlmostPositiveRoot) -> Result<(), Error> {
        if a.rank() != self.n() || !(a.is_positive() || a.negative_simple().is_some()) {
            return Err(Error::Domain(format!("{a} is not an almost positive root of A_{}", self.n())));
        }
        Ok(())
    }

    pub fn sigma_i(&self, a: &AlmostPositiveRoot, i: usize) -> Result<AlmostPositiveRoot, Error> {
        self.check(a)?;
        if i == 0 || i > self.n() {
            return Err(Error::IndexOutOfRange { index: i, size: self.n() });
        }
        let out = match a.negative_simple() {
            Some(j) if j == i => AlmostPositiveRoot::simple(self.n(), i),
            Some(_) => a.clone(),
            None => AlmostPositiveRoot { coeffs: self.diagram.reflect(&a.coeffs, i) },
        };
        self.check(&out)?;
        Ok(out)
    }

    fn product(&self, a: &AlmostPositiveRoot, set: &[usize]) -> Result<AlmostPositiveRoot, Error> {
        set.iter().try_fold(a.clone(), |acc, &i| self.sigma_i(&acc, i))
    }

    /// `σ = σ_r σ_- σ_r σ_+`.
    pub fn sigma(&self, a: &AlmostPositiveRoot) -> Result<AlmostPositiveRoot, Error> {
        let a = self.product(a, &self.plus)?;
        let a = self.sigma_i(&a, self.r)?;
        let a = self.product(&a, &self.minus)?;
        self.sigma_i(&a, self.r)
    }

    pub fn sigma_pow(&self, a: &AlmostPositiveRoot, k: usize) -> Result<AlmostPositiveRoot, Error> {
        (0..k).try_fold(a.clone(), |acc, _| self.sigma(&acc))
    }

    pub fn all_positive(&self) -> Vec<AlmostPositiveRoot> {
        let n = self.n();
        (1..=n).flat_map(|i| (i..=n).map(move |j| AlmostPositiveRoot::interval(n, i, j))).collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct OrbitRow {
    pub i: usize,
    pub sign: Option<Sign>,
    /// For `i != r`: `-α_i, σ(-α_i), ...` up to the first negative simple root.
    /// For `i = r`: the orbits of `-α_r` and `α_r` interleaved, one period each.
    pub entries: Vec<AlmostPositiveRoot>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OrbitTable {
    pub r: usize,
    pub rows: Vec<OrbitRow>,
}

fn orbit_until_negative(m: &SigmaModel, start: &AlmostPositiveRoot) -> Result<Vec<AlmostPositiveRoot>, Error> {
    let mut out = vec![start.clone()];
    let mut cur = start.clone();
    for _ in 0..4 * m.r {
        cur = m.sigma(&cur)?;
        out.push(cur.clone());
        if cur.negative_simple().is_some() {
            return Ok(out);
        }
    }
    Err(Error::Domain(format!("orbit of {start} does not return to a negative simple root")))
}

fn orbit_until_return(m: &SigmaModel, start: &AlmostPositiveRoot) -> Result<Vec<AlmostPositiveRoot>, Error> {
    let mut out = vec![start.clone()];
    let mut cur = start.clone();
    for _ in 0..4 * m.r {
        cur = m.sigma(&cur)?;
        out.push(cur.clone());
        if &cur == start {
            return Ok(out);
        }
    }
    Err(Error::Domain(format!("orbit of {start} does not close")))
}

pub fn orbit_decomposition(r: usize) -> Result<OrbitTable, Error> {
    let m = SigmaModel::new(r)?;
    let n = m.n();
    let mut rows = Vec::new();
    for i in 1..=n {
        let entries = if i == r {
            let neg = orbit_until_return(&m, &AlmostPositiveRoot::neg_simple(n, r))?;
            let pos = orbit_until_return(&m, &AlmostPositiveRoot::simple(n, r))?;
            if neg.len() != pos.len() {
                return Err(Error::Domain("middle orbits have different lengths".into()));
            }
            neg.into_iter().zip(pos).flat_map(|(a, b)| [a, b]).collect()
        } else {
            orbit_until_negative(&m, &AlmostPositiveRoot::neg_simple(n, i))?
        };
        rows.push(OrbitRow { i, sign: j_sign(r, i), entries });
    }
    Ok(OrbitTable { r, rows })
}

impl OrbitTable {
    /// The positive roots met by the orbits, with multiplicity.
    pub fn positive_entries(&self) -> Vec<AlmostPositiveRoot> {
        let mut out = Vec::new();
        for row in &self.rows {
            if row.i == self.r {
                let len = row.entries.len();
                // both closing entries repeat the starting points
                out.extend(row.entries[..len - 2].iter().filter(|a| a.is_positive()).cloned());
            } else {
                out.extend(row.entries.iter().filter(|a| a.is_positive()).cloned());
            }
        }
        out
    }

    /// One line per row: label, sign, then the entries.
    pub fn to_text(&self) -> String {
        let mut s = format!("orbits of sigma, r = {}\n", self.r);
        for row in &self.rows {
            let sign = row.sign.map_or(" ", |s| if s == Sign::Plus { "+" } else { "-" });
            s.push_str(&format!("{} {sign} :", row.i));
            let last = row.entries.len() - 1;
            for (k, e) in row.entries.iter().enumerate() {
                if row.i == self.r && k == last {
                    s.push_str(&format!(" a{}", self.r));
                } else {
                    s.push_str(&format!(" {e}"));
                }
            }
            s.push('\n');
        }
        s
    }
}

/// Orbit lengths, terminal roots and exhaustion of Φ₊.
pub fn check_orbits(table: &OrbitTable) -> Tally {
    let r = table.r;
    let n = 2 * r - 1;
    let mut t = Tally::default();
    for row in &table.rows {
        let i = row.i;
        let e = &row.entries;
        match row.sign {
            Some(s) => {
                let interior = if s == Sign::Plus { r - 1 } else { r };
                t.record(e.len() == interior + 2, || format!("row {i}: {} entries", e.len()));
                t.record(e[1..e.len() - 1].iter().all(|a| a.is_positive()), || format!("row {i}: interior leaves Φ₊"));
                t.record(e.last().and_then(|a| a.negative_simple()) == Some(2 * r - i), || {
                    format!("row {i}: ends at {}", e.last().expect("nonempty"))
                });
            }
            None => {
                t.record(e.len() == 2 * (r + 1), || format!("middle row: {} entries", e.len()));
                let neg: Vec<_> = e.iter().step_by(2).collect();
                let pos: Vec<_> = e.iter().skip(1).step_by(2).collect();
                t.record(neg[1..r].iter().all(|a| a.is_positive()), || "orbit of -a_r leaves Φ₊".into());
                t.record(pos[..r].iter().all(|a| a.is_positive()), || "orbit of a_r leaves Φ₊".into());
            }
        }
    }
    let found = table.positive_entries();
    let distinct: BTreeSet<_> = found.iter().cloned().collect();
    t.record(found.len() == r * (2 * r - 1) && distinct.len() == found.len(), || {
        format!("{} positive entries, {} distinct, want {}", found.len(), distinct.len(), r * (2 * r - 1))
    });
    let all: BTreeSet<_> = SigmaModel::new(r).expect("r >= 2").all_positive().into_iter().collect();
    t.record(distinct == all && all.len() == n * (n + 1) / 2, || "orbits do not exhaust Φ₊".into());
    t
}

/// `α_i(u)` for `-h∨ <= u < 0`, with `u2 = 2u`.
pub fn alpha_of(r: usize, i: usize, u2: i64) -> Result<AlmostPositiveRoot, Error> {
    let m = SigmaModel::new(r)?;
    let n = m.n();
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, size: n });
    }
    let hd = 2 * r as i64 - 1;
    if u2 < -2 * hd || u2 >= 0 {
        return Err(Error::Domain(format!("2u = {u2} outside [-2h, 0)")));
    }
    let (start, num) = match (j_sign(r, i), u2.rem_euclid(4)) {
        (Some(Sign::Plus), 0) => (AlmostPositiveRoot::neg_simple(n, i), -u2),
        (Some(Sign::Minus), 2) => (AlmostPositiveRoot::neg_simple(n, i), 2 - u2),
        (None, 1) => (AlmostPositiveRoot::neg_simple(n, i), 1 - u2),
        (None, 3) => (AlmostPositiveRoot::simple(n, i), -u2 - 1),
        _ => return Err(Error::Domain(format!("α_{i}(u) is not defined at 2u = {u2}"))),
    };
    m.sigma_pow(&start, (num / 4) as usize)
}

/// Whether `α_i(u)` is defined at `2u = u2` (congruence only).
pub fn alpha_defined(r: usize, i: usize, u2: i64) -> bool {
    matches!(
        (j_sign(r, i), u2.rem_euclid(4)),
        (Some(Sign::Plus), 0) | (Some(Sign::Minus), 2) | (None, 1) | (None, 3)
    )
}

fn is_rho_domain(r: usize, a: &AlmostPositiveRoot) -> bool {
    let n = 2 * r - 1;
    if !a.is_positive() || a.rank() != n {
        return false;
    }
    let middle = orbit_decomposition(r).expect("r >= 2");
    !middle.rows[r - 1].entries.contains(a)
}

/// Removes `α_r`; defined on the orbits of `-α_i`, `i != r`.
pub fn rho(r: usize, a: &AlmostPositiveRoot) -> Result<AlmostPositiveRoot, Error> {
    if !is_rho_domain(r, a) {
        return Err(Error::Domain(format!("{a} is not in the domain of rho")));
    }
    let mut coeffs = a.coeffs.clone();
    coeffs[r - 1] = 0;
    Ok(AlmostPositiveRoot { coeffs })
}

/// Inserts `α_r` when `α_{r-1}` is present.
pub fn rho_inverse(r: usize, a: &AlmostPositiveRoot) -> Result<AlmostPositiveRoot, Error> {
    if a.rank() != 2 * r - 1 || a.coeff(r) != 0 || !is_prime_positive(r, a) {
        return Err(Error::Domain(format!("{a} is not a positive root of A_(2r-2)")));
    }
    let mut coeffs = a.coeffs.clone();
    if a.coeff(r - 1) == 1 {
        coeffs[r - 1] = 1;
    }
    Ok(AlmostPositiveRoot { coeffs })
}

/// Labels of A_{2r-2} in diagram order: `1..r-1, r+1..2r-1`.
fn prime_labels(r: usize) -> Vec<usize> {
    (1..2 * r).filter(|&i| i != r).collect()
}

/// Positive root of A_{2r-2}: 0/1 with support consecutive in the primed order.
fn is_prime_positive(r: usize, a: &AlmostPositiveRoot) -> bool {
    let labels = prime_labels(r);
    let pos: Vec<usize> = labels.iter().enumerate().filter(|(_, &i)| a.coeff(i) != 0).map(|(k, _)| k).collect();
    !pos.is_empty()
        && pos.iter().all(|&k| a.coeff(labels[k]) == 1)
        && pos.last().expect("nonempty") - pos[0] + 1 == pos.len()
}

/// All positive roots of A_{2r-2} in the labelling of `rho`.
pub fn prime_positive_roots(r: usize) -> Vec<AlmostPositiveRoot> {
    let labels = prime_labels(r);
    let n = 2 * r - 1;
    let mut out = Vec::new();
    for i in 0..labels.len() {
        for j in i..labels.len() {
            let mut coeffs = vec![0; n];
            for &l in &labels[i..=j] {
                coeffs[l - 1] = 1;
            }
            out.push(AlmostPositiveRoot { coeffs });
        }
    }
    out
}

/// The Coxeter element `s = s_- s_+` of A_{2r-2} acting on root vectors.
pub fn coxeter_s(r: usize, v: &[i64]) -> Vec<i64> {
    let d = Diagram::path(&prime_labels(r), 2 * r - 1);
    let v = j_set(r, Sign::Plus).iter().fold(v.to_vec(), |acc, &i| d.reflect(&acc, i));
    j_set(r, Sign::Minus).iter().fold(v, |acc, &i| d.reflect(&acc, i))
}

/// Bijectivity of ρ and `ρ∘σ = s∘ρ` wherever σ stays inside the domain.
pub fn check_rho(r: usize) -> Result<Tally, Error> {
    let m = SigmaModel::new(r)?;
    let mut t = Tally::default();
    let domain: Vec<_> = m.all_positive().into_iter().filter(|a| is_rho_domain(r, a)).collect();
    let image: BTreeSet<_> = domain.iter().map(|a| rho(r, a)).collect::<Result<_, _>>()?;
    let target: BTreeSet<_> = prime_positive_roots(r).into_iter().collect();
    t.record(image.len() == domain.len() && image == target, || "rho is not a bijection onto Φ'₊".into());
    for a in &target {
        t.record(rho(r, &rho_inverse(r, a)?)? == *a, || format!("rho(rho^-1({a})) != {a}"));
    }
    for a in &domain {
        t.record(rho_inverse(r, &rho(r, a)?)? == *a, || format!("rho^-1(rho({a})) != {a}"));
        let next = m.sigma(a)?;
        if is_rho_domain(r, &next) {
            let lhs = rho(r, &next)?;
            t.record(lhs.coeffs == coxeter_s(r, &rho(r, a)?.coeffs), || format!("rho(sigma({a})) != s(rho({a}))"));
        }
    }
    Ok(t)
}

/// Relations among `α_i(u)` (or `t_i(u)`) around every centre whose terms lie in `[-h∨, 0)`.
fn check_recurrences(r: usize, f: &dyn Fn(usize, i64) -> Option<Vec<i64>>, t_form: bool) -> Tally {
    let n = 2 * r - 1;
    let lo = -2 * (2 * r as i64 - 1);
    let zero = vec![0i64; n];
    let inside = |u2: i64| (lo..0).contains(&u2);
    let get = |i: usize, u2: i64| -> Option<Vec<i64>> {
        if i == 0 || i == 2 * r {
            Some(zero.clone())
        } else {
            f(i, u2)
        }
    };
    let add = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>();
    let mut t = Tally::default();
    for i in 1..=n {
        for c in lo..0 {
            let (lhs_at, rhs): (Vec<(usize, i64)>, Vec<(usize, i64)>) = if i == r {
                if c.rem_euclid(2) != 0 {
                    continue;
                }
                let nb = if c.rem_euclid(4) == 2 { r - 1 } else { r + 1 };
                (vec![(r, c - 1), (r, c + 1)], vec![(nb, c)])
            } else {
                if alpha_defined(r, i, c) || !alpha_defined(r, i, c - 2) {
                    continue;
                }
                let left = if i == r + 1 { r - 1 } else { i - 1 };
                let right = if i == r - 1 { r + 1 } else { i + 1 };
                let mut rhs = vec![(left, c), (right, c)];
                if t_form && (i == r - 1 || i == r + 1) {
                    let outer = if i == r - 1 { r - 2 } else { r + 2 };
                    rhs = vec![(outer, c), (r, c - 1), (r, c + 1)];
                }
                (vec![(i, c - 2), (i, c + 2)], rhs)
            };
            let all: Vec<_> = lhs_at.iter().chain(&rhs).collect();
            if all.iter().any(|&&(j, u)| j != 0 && j != 2 * r && !inside(u)) {
                continue;
            }
            let sum = |pts: &[(usize, i64)]| -> Option<Vec<i64>> {
                pts.iter().try_fold(zero.clone(), |acc, &(j, u)| get(j, u).map(|v| add(&acc, &v)))
            };
            let (l, rr) = (sum(&lhs_at), sum(&rhs));
            t.record(l.is_some() && l == rr, || format!("recurrence for i={i} fails at 2u={c}"));
        }
    }
    t
}

/// The recurrences among the `α_i(u)`.
pub fn check_alpha_recurrences(r: usize) -> Tally {
    let f = |i: usize, u2: i64| alpha_of(r, i, u2).ok().map(|a| a.coeffs);
    check_recurrences(r, &f, false)
}

#[derive(Clone, Debug, Default)]
pub struct TvecReport {
    /// `t_i(u) = -α_i(u)` on the grid of `α`.
    pub tvec: Tally,
    /// `π_A([y_{r1}(u)]) = π_A([y_{r3}(u)]) = 1` at even `u`.
    pub pi_a: Tally,
    /// The t-recurrences.
    pub trec: Tally,
    /// The α-recurrences.
    pub alpha: Tally,
    /// `{-t_i(u)}` is Φ₊ exactly once.
    pub exhaustion: Tally,
    /// `t_i(-h∨) = -α_{ω(i)}` for `i != r`, `-α_r` for `i = r`.
    pub endpoint: Tally,
}

impl TvecReport {
    pub fn passed(&self) -> bool {
        [&self.tvec, &self.pi_a, &self.trec, &self.alpha, &self.exhaustion, &self.endpoint]
            .iter()
            .all(|t| t.passed())
    }
}

/// Compares the level-2 tropical trace with the root model over `-h∨ <= u < 0`.
pub fn check_tvec_correspondence(cfg: &BrConfig) -> Result<TvecReport, Error> {
    if cfg.level != 2 {
        return Err(Error::Config("the root model needs level 2".into()));
    }
    let r = cfg.r;
    let n = 2 * r - 1;
    let lo = -2 * cfg.h_dual();
    let trace = run_tropical(cfg, lo, 0)?;
    let vertex = |i: usize| cfg.index(i, if i == r { 2 } else { 1 }).expect("vertex");
    let killed = [cfg.index(r, 1).expect("vertex"), cfg.index(r, 3).expect("vertex")];
    // exponent vector of π_A(m) in the coordinates y_1..y_{2r-1}
    let pi_a = |m: &crate::semifield::TropMonomial| -> Vec<i64> { (1..=n).map(|k| m.exps()[vertex(k)]).collect() };
    let is_one = |m: &crate::semifield::TropMonomial| {
        m.exps().iter().enumerate().all(|(k, &e)| e == 0 || killed.contains(&k))
    };
    let tv = |i: usize, u2: i64| -> Option<Vec<i64>> {
        if !alpha_defined(r, i, u2) {
            return None;
        }
        trace.get(vertex(i), u2).map(pi_a)
    };

    let mut rep = TvecReport::default();
    let mut seen = Vec::new();
    for i in 1..=n {
        for u2 in lo..0 {
            if !alpha_defined(r, i, u2) {
                continue;
            }
            let a = alpha_of(r, i, u2)?;
            let t = tv(i, u2).expect("covered");
            let want: Vec<i64> = a.coeffs.iter().map(|c| -c).collect();
            rep.tvec.record(t == want, || format!("t_{i}(2u={u2}) = {t:?}, -alpha = {want:?}"));
            seen.push(AlmostPositiveRoot { coeffs: t.iter().map(|c| -c).collect() });
        }
    }
    for u2 in (lo..0).filter(|u| u.rem_euclid(4) == 0) {
        for &k in &killed {
            rep.pi_a.record(is_one(trace.get(k, u2).expect("covered")), || {
                format!("pi_A(y_{}(2u={u2})) != 1", cfg.label(k))
            });
        }
    }
    let distinct: BTreeSet<_> = seen.iter().cloned().collect();
    let all: BTreeSet<_> = SigmaModel::new(r)?.all_positive().into_iter().collect();
    rep.exhaustion.record(seen.len() == all.len() && distinct == all, || {
        format!("{} values, {} distinct, |Φ₊| = {}", seen.len(), distinct.len(), all.len())
    });
    for i in 1..=n {
        let got = pi_a(trace.get(vertex(i), lo).expect("covered"));
        let j = if i == r { r } else { 2 * r - i };
        let want = AlmostPositiveRoot::neg_simple(n, j).coeffs;
        rep.endpoint.record(got == want, || format!("t_{i}(-h) = {got:?}"));
    }
    rep.trec = check_recurrences(r, &tv, true);
    rep.alpha = check_alpha_recurrences(r);
    Ok(rep)
}
