"""SGD with momentum and weight decay, milestone schedules, epoch accounting."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .nets import Mlp


@dataclass
class OptimState:
    """Velocity buffers plus the two scalar knobs.

    Weight decay is added to the gradient before the momentum buffer
    (coupled decay) and applies to weight matrices only, never to biases.
    """

    momentum: float = 0.9
    weight_decay: float = 0.0005
    velocities: dict[str, np.ndarray] = field(default_factory=dict)


def init_optim(model: Mlp, momentum: float = 0.9,
               weight_decay: float = 0.0005) -> OptimState:
    if not 0.0 <= momentum < 1.0:
        raise ValueError(f"momentum must be in [0, 1), got {momentum}")
    if weight_decay < 0.0:
        raise ValueError(f"weight_decay must be >= 0, got {weight_decay}")
    velocities = {name: np.zeros_like(w) for name, w in model.param_items()}
    return OptimState(momentum, weight_decay, velocities)


def sgd_step(model: Mlp, grads: dict[str, np.ndarray], learning_rate: float,
             opt: OptimState) -> Mlp:
    """One in-place update: g' = g + wd*w (matrices only), v = mu*v + g',
    w = w - lr*v.  With momentum and decay both zero this reduces to the
    plain gradient step w - lr*g exactly."""
    if learning_rate <= 0.0:
        raise ValueError(f"learning_rate must be > 0, got {learning_rate}")
    for name, w in model.param_items():
        g = grads[name]
        if opt.weight_decay != 0.0 and w.ndim > 1:
            g = g + opt.weight_decay * w
        v = opt.velocities[name]
        v *= opt.momentum
        v += g
        w -= learning_rate * v
    return model


@dataclass(frozen=True)
class LrSchedule:
    """Piecewise-constant rate decayed at each milestone effective epoch."""

    initial_rate: float
    milestones: tuple[int, ...] = ()
    decay_factor: float = 0.1

    def __post_init__(self) -> None:
        if self.initial_rate <= 0.0:
            raise ValueError(f"initial_rate must be > 0, got {self.initial_rate}")
        if not 0.0 < self.decay_factor < 1.0:
            raise ValueError(
                f"decay_factor must be in (0, 1), got {self.decay_factor}"
            )
        if any(b <= a for a, b in zip(self.milestones, self.milestones[1:])):
            raise ValueError(
                f"milestones must be strictly increasing, got {self.milestones}"
            )


def lr_at(schedule: LrSchedule, effective_epoch) -> float:
    """Rate in force at a given effective epoch: initial_rate times
    decay_factor to the number of milestones at or before it."""
    if effective_epoch < 0:
        raise ValueError(f"effective_epoch must be >= 0, got {effective_epoch}")
    passed = sum(1 for m in schedule.milestones if m <= effective_epoch)
    return schedule.initial_rate * schedule.decay_factor ** passed


def effective_epoch(iterations_done: int, dataset_size: int,
                    batch_size: int) -> Fraction:
    """Completed iterations over iterations-per-epoch, exact.

    One epoch is floor(dataset_size / batch_size) iterations, the count a
    non-replacement pass makes; the samplers that never finish a pass are
    measured on the same clock.
    """
    if iterations_done < 0:
        raise ValueError(f"iterations_done must be >= 0, got {iterations_done}")
    per_epoch = dataset_size // batch_size
    if per_epoch == 0:
        raise ValueError(
            f"no full batch fits: dataset_size={dataset_size} < "
            f"batch_size={batch_size}"
        )
    return Fraction(iterations_done, per_epoch)
