//! Enumeration and percolation wired together, either in one thread or as a
//! producer and a consumer joined by a bounded channel.

use std::sync::mpsc;
use std::thread;

use crate::community::{materialize, TemporalCommunity};
use crate::error::Result;
use crate::kclique::KCliqueEnumerator;
use crate::percolation::PercolationState;
use crate::stream::LinkStream;
use crate::time::Time;

pub const DEFAULT_CHANNEL_CAPACITY: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    SingleThread,
    /// Enumeration runs on its own thread; at most `capacity` cliques wait in
    /// the channel before the producer blocks.
    Threaded { capacity: usize },
}

impl Default for Mode {
    fn default() -> Self {
        Mode::Threaded {
            capacity: DEFAULT_CHANNEL_CAPACITY,
        }
    }
}

/// Enumerates the maximal k-cliques of `stream` and percolates them.
pub fn percolate<T: Time>(stream: &LinkStream<T>, k: usize, mode: Mode) -> Result<PercolationState<T>> {
    let enumerator = KCliqueEnumerator::new(stream, k)?;
    let mut state = PercolationState::new(k)?;
    match mode {
        Mode::SingleThread => {
            for clique in enumerator {
                state.process(&clique)?;
            }
        }
        Mode::Threaded { capacity } => {
            let (tx, rx) = mpsc::sync_channel(capacity.max(1));
            thread::scope(|scope| -> Result<()> {
                scope.spawn(move || {
                    for clique in enumerator {
                        if tx.send(clique).is_err() {
                            break;
                        }
                    }
                });
                // an early return drops `rx`, which stops the producer
                for clique in rx {
                    state.process(&clique)?;
                }
                Ok(())
            })?;
        }
    }
    Ok(state)
}

/// Communities of `stream` for clique size `k`.
pub fn communities<T: Time>(stream: &LinkStream<T>, k: usize, mode: Mode) -> Result<Vec<TemporalCommunity<T>>> {
    let mut state = percolate(stream, k, mode)?;
    materialize(&mut state)
}
