import numpy as np
import pytest

from retchain.errors import ContractError, ShapeError
from retchain.nn import (
    LinearLayer,
    Mlp,
    finite_diff_check,
    mlp_backward,
    mlp_forward,
    param_dict,
    rng_for,
    with_param_dict,
)


def identity_net(dim=2):
    return Mlp([LinearLayer(weight=np.eye(dim), bias=np.zeros(dim), activation="identity")])


class TestForward:
    def test_identity_layer(self):
        y, _ = mlp_forward(identity_net(), np.array([1.0, 2.0]))
        np.testing.assert_array_equal(y, [1.0, 2.0])

    def test_hand_multiplied_single_layer(self):
        net = Mlp(
            [
                LinearLayer(
                    weight=np.array([[2.0, 0.0], [0.0, 3.0]]),
                    bias=np.array([1.0, -1.0]),
                    activation="identity",
                )
            ]
        )
        y, _ = mlp_forward(net, np.array([1.0, 1.0]))
        np.testing.assert_allclose(y, [3.0, 2.0])

    def test_relu_kills_negative_preactivations(self):
        net = Mlp(
            [
                LinearLayer(weight=-np.eye(3), bias=np.zeros(3), activation="relu"),
                LinearLayer(weight=np.eye(3), bias=np.zeros(3), activation="identity"),
            ]
        )
        y, _ = mlp_forward(net, np.array([1.0, 2.0, 3.0]))
        np.testing.assert_array_equal(y, np.zeros(3))

    def test_purity_bit_identical(self):
        rng = rng_for(7, "purity")
        net = Mlp.create([5, 8, 3], "tanh", rng)
        x = rng.standard_normal(5)
        y1, _ = mlp_forward(net, x)
        y2, _ = mlp_forward(net, x)
        assert np.array_equal(y1, y2)

    def test_batch_matches_per_row(self):
        rng = rng_for(8, "batch")
        net = Mlp.create([4, 6, 2], "tanh", rng)
        batch = rng.standard_normal((5, 4))
        y_batch, _ = mlp_forward(net, batch)
        for i in range(5):
            y_row, _ = mlp_forward(net, batch[i])
            # BLAS may accumulate batched and single-row matmuls in different
            # orders, so agreement is to float noise, not bitwise.
            np.testing.assert_allclose(y_batch[i], y_row, rtol=1e-12, atol=1e-14)

    def test_dimension_mismatch_names_layer(self):
        net = identity_net(2)
        with pytest.raises(ShapeError, match="layer 0"):
            mlp_forward(net, np.ones(3))

    def test_dims_must_chain(self):
        with pytest.raises(ShapeError, match="chain"):
            Mlp(
                [
                    LinearLayer(weight=np.ones((3, 2)), bias=np.zeros(3)),
                    LinearLayer(weight=np.ones((2, 4)), bias=np.zeros(2)),
                ]
            )

    def test_final_activation_must_be_identity(self):
        with pytest.raises(ContractError, match="identity"):
            Mlp([LinearLayer(weight=np.eye(2), bias=np.zeros(2), activation="tanh")])


class TestBackward:
    def test_identity_network_passes_gradient_through(self):
        net = identity_net(3)
        _, tape = mlp_forward(net, np.array([0.5, -1.0, 2.0]))
        g = np.array([1.0, 2.0, 3.0])
        _, input_grad = mlp_backward(net, tape, g)
        np.testing.assert_array_equal(input_grad, g)

    def test_zero_output_grad_gives_zero_grads(self):
        rng = rng_for(9, "zerograd")
        net = Mlp.create([4, 5, 2], "tanh", rng)
        _, tape = mlp_forward(net, rng.standard_normal(4))
        grads, input_grad = mlp_backward(net, tape, np.zeros(2))
        assert all(np.all(g == 0.0) for g in grads.values())
        assert np.all(input_grad == 0.0)

    def test_grad_shapes_match_params(self):
        rng = rng_for(10, "shapes")
        net = Mlp.create([3, 7, 4], "relu", rng)
        _, tape = mlp_forward(net, rng.standard_normal(3))
        grads, _ = mlp_backward(net, tape, rng.standard_normal(4))
        for path, p in param_dict(net).items():
            assert grads[path].shape == p.shape

    def test_stale_tape_rejected(self):
        rng = rng_for(11, "stale")
        net_a = Mlp.create([3, 4, 2], "tanh", rng)
        net_b = Mlp.create([3, 2], "tanh", rng)
        _, tape = mlp_forward(net_a, rng.standard_normal(3))
        with pytest.raises(ContractError, match="tape"):
            mlp_backward(net_b, tape, np.zeros(2))

    @pytest.mark.parametrize("seed", range(12))
    @pytest.mark.parametrize("activation", ["tanh", "relu", "identity"])
    def test_gradients_match_finite_differences(self, seed, activation):
        rng = rng_for(seed, "fd", activation)
        net = Mlp.create([4, 6, 3], activation, rng)
        x = rng.standard_normal(4)
        direction = rng.standard_normal(3)

        def loss_fn(params):
            probe = with_param_dict(net, params)
            y, _ = mlp_forward(probe, x)
            return float(direction @ y)

        _, tape = mlp_forward(net, x)
        grads, _ = mlp_backward(net, tape, direction)
        report = finite_diff_check(loss_fn, param_dict(net), grads, h=1e-5, tol=1e-4)
        assert report.passed, str(report)
