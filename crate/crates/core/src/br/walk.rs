use super::BrConfig;
use crate::matrix::SkewMatrix;
use crate::seed::{Coefficient, Seed};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

/// One step of the schedule from time `u2` in the given direction. The seed
/// must carry the exchange matrix the schedule prescribes at `u2`.
pub fn schedule_step<Y: Coefficient>(
    cfg: &BrConfig,
    seed: &Seed<Y>,
    u2: i64,
    dir: Direction,
) -> Result<Seed<Y>, Error> {
    let sched = Schedule::new(cfg);
    sched.step(seed, u2, dir)
}

pub(crate) struct Schedule {
    cfg: BrConfig,
    mats: [SkewMatrix; 4],
}

impl Schedule {
    pub(crate) fn new(cfg: &BrConfig) -> Self {
        Schedule {
            cfg: *cfg,
            mats: [0, 1, 2, 3].map(|p| cfg.expected_matrix(p)),
        }
    }

    pub(crate) fn matrix(&self, u2: i64) -> &SkewMatrix {
        &self.mats[u2.rem_euclid(4) as usize]
    }

    pub(crate) fn batch(&self, u2: i64, dir: Direction) -> Vec<usize> {
        match dir {
            Direction::Forward => self.cfg.forward_batch(u2),
            Direction::Backward => self.cfg.backward_batch(u2),
        }
    }

    pub(crate) fn step<Y: Coefficient>(&self, seed: &Seed<Y>, u2: i64, dir: Direction) -> Result<Seed<Y>, Error> {
        if &seed.b != self.matrix(u2) {
            return Err(Error::ScheduleMismatch(u2));
        }
        let next = seed.mutate_batch(&self.batch(u2, dir))?;
        let to = match dir {
            Direction::Forward => u2 + 1,
            Direction::Backward => u2 - 1,
        };
        if &next.b != self.matrix(to) {
            return Err(Error::ScheduleMismatch(to));
        }
        Ok(next)
    }
}

/// Seeds `s(u)` for every half-integer `u` in a window around `u = 0`.
#[derive(Clone, Debug)]
pub struct Walk<Y> {
    pub cfg: BrConfig,
    from_u2: i64,
    seeds: Vec<Seed<Y>>,
}

impl<Y: Coefficient> Walk<Y> {
    /// Evolves `initial` (the seed at u = 0) over `from_u2 <= 2u <= to_u2`.
    pub fn run(cfg: &BrConfig, initial: Seed<Y>, from_u2: i64, to_u2: i64) -> Result<Self, Error> {
        if from_u2 > 0 || to_u2 < 0 {
            return Err(Error::Config("walk window must contain u = 0".into()));
        }
        let sched = Schedule::new(cfg);
        let mut fwd = vec![initial.clone()];
        for u2 in 0..to_u2 {
            let s = sched.step(fwd.last().expect("nonempty"), u2, Direction::Forward)?;
            fwd.push(s);
        }
        let mut back = Vec::new();
        let mut cur = initial;
        for u2 in (from_u2 + 1..=0).rev() {
            cur = sched.step(&cur, u2, Direction::Backward)?;
            back.push(cur.clone());
        }
        back.reverse();
        back.extend(fwd);
        Ok(Walk {
            cfg: *cfg,
            from_u2,
            seeds: back,
        })
    }

    pub fn from_u2(&self) -> i64 {
        self.from_u2
    }

    pub fn to_u2(&self) -> i64 {
        self.from_u2 + self.seeds.len() as i64 - 1
    }

    pub fn seed(&self, u2: i64) -> Option<&Seed<Y>> {
        if u2 < self.from_u2 {
            return None;
        }
        self.seeds.get((u2 - self.from_u2) as usize)
    }

    pub fn y(&self, i: usize, u2: i64) -> Option<&Y> {
        self.seed(u2).map(|s| &s.y[i])
    }

    pub fn x(&self, i: usize, u2: i64) -> Option<&crate::laurent::LaurentPoly> {
        self.seed(u2).and_then(|s| s.x.as_ref()).map(|x| &x[i])
    }
}
