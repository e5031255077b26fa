#include <doctest.h>

#include <chrono>
#include <random>
#include <thread>
#include <vector>

#include "heat1d/errors.hpp"
#include "heat1d/exchange.hpp"
#include "heat1d/field.hpp"
#include "heat1d/solver.hpp"

using namespace heat1d;

namespace {

SolverConfig queues(std::size_t nodes, std::size_t steps, std::size_t threads, bool validate = false) {
    SolverConfig c;
    c.nodes = nodes;
    c.steps = steps;
    c.threads = threads;
    c.strategy = Strategy::queues;
    c.validate = validate;
    return c;
}

std::vector<double> oracle(std::size_t nodes, std::size_t steps) {
    SolverConfig c;
    c.nodes = nodes;
    c.steps = steps;
    c.strategy = Strategy::sequential;
    const Field f = solve(c);
    return {f.current().begin(), f.current().end()};
}

}  // namespace

TEST_CASE("make_ring wiring") {
    for (std::size_t t : {1u, 2u, 3u, 5u}) {
        CAPTURE(t);
        auto links = make_ring(t);
        REQUIRE(links.size() == t);
        for (std::size_t i = 0; i < t; ++i) {
            links[i].send_right.send({double(i), std::nullopt});
            links[i].send_left.send({double(100 + i), std::nullopt});
        }
        for (std::size_t i = 0; i < t; ++i) {
            CHECK(links[i].recv_left.recv().value == double((i + t - 1) % t));
            CHECK(links[i].recv_right.recv().value == double(100 + (i + 1) % t));
        }
    }
}

TEST_CASE("run_segment on a self-linked ring") {
    SolverConfig c = queues(4, 1, 1);
    Field f = init_field(c);
    auto links = make_ring(1);
    run_segment({0, 4}, links[0], c, f.current(), f.next(), 1);
    f.commit();
    CHECK(std::vector<double>(f.current().begin(), f.current().end()) == std::vector<double>{1, 1, 2, 2});
    CHECK(links[0].send_left.sent_count() == 1);
    CHECK(links[0].send_right.sent_count() == 1);
}

TEST_CASE("one cell per segment matches the oracle") {
    for (std::size_t n : {1u, 2u, 3u, 8u}) {
        Field f = init_field(queues(n, 3, n));
        advance(f, queues(n, 3, n));
        CHECK(std::vector<double>(f.current().begin(), f.current().end()) == oracle(n, 3));
    }
}

TEST_CASE("zero steps sends nothing") {
    Field f = init_field(queues(8, 0, 4));
    const auto stats = advance(f, queues(8, 0, 4));
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(stats.sent_left[i] == 0);
        CHECK(stats.sent_right[i] == 0);
    }
}

TEST_CASE("each channel carries exactly `steps` messages") {
    Field f = init_field(queues(40, 25, 6, true));
    const auto stats = advance(f, queues(40, 25, 6, true));
    REQUIRE(stats.sent_left.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(stats.sent_left[i] == 25);
        CHECK(stats.sent_right[i] == 25);
    }
}

TEST_CASE("validate mode rejects a mistagged ghost") {
    SolverConfig c = queues(4, 1, 1, true);
    Field f = init_field(c);

    auto [out_left, drain_left] = make_channel<GhostMessage>(4);
    auto [out_right, drain_right] = make_channel<GhostMessage>(4);
    auto [feed_left, in_left] = make_channel<GhostMessage>(4);
    auto [feed_right, in_right] = make_channel<GhostMessage>(4);
    SegmentLinks links{std::move(out_left), std::move(out_right), std::move(in_left), std::move(in_right)};

    SUBCASE("wrong step") {
        feed_right.send({3.0, 1});
        feed_left.send({3.0, 0});
        CHECK_THROWS_AS(run_segment({0, 4}, links, c, f.current(), f.next(), 1), ProtocolError);
    }
    SUBCASE("missing tag") {
        feed_right.send({3.0, std::nullopt});
        CHECK_THROWS_AS(run_segment({0, 4}, links, c, f.current(), f.next(), 1), ProtocolError);
    }
    SUBCASE("correct tags pass and the outgoing ones are step-stamped") {
        feed_right.send({0.0, 0});
        feed_left.send({3.0, 0});
        CHECK_NOTHROW(run_segment({0, 4}, links, c, f.current(), f.next(), 1));
        const auto left = drain_left.recv();
        const auto right = drain_right.recv();
        CHECK(left.value == 0.0);
        CHECK(left.step_tag == 0u);
        CHECK(right.value == 3.0);
        CHECK(right.step_tag == 0u);
    }
}

TEST_CASE("worker failures surface without deadlock") {
    ExchangeOptions options;
    options.step_hook = [](std::size_t segment, std::size_t step) {
        if (segment == 3 && step == 5) throw ProtocolError("injected");
    };
    Field f = init_field(queues(64, 50, 8));
    CHECK_THROWS_WITH_AS(advance(f, queues(64, 50, 8), options), "injected", ProtocolError);
}

TEST_CASE("randomized delays never deadlock and never change the result") {
    for (std::size_t capacity : {2u, 4u}) {
        CAPTURE(capacity);
        ExchangeOptions options;
        options.capacity = capacity;
        std::vector<std::mt19937> rngs;
        for (unsigned i = 0; i < 8; ++i) rngs.emplace_back(1234 + i);
        options.step_hook = [&](std::size_t segment, std::size_t) {
            // each worker owns its generator
            const auto micros = rngs[segment]() % 200;
            if (micros > 120) std::this_thread::sleep_for(std::chrono::microseconds(micros));
        };
        SolverConfig c = queues(203, 120, 8, true);
        Field f = init_field(c);
        advance(f, c, options);
        CHECK(std::vector<double>(f.current().begin(), f.current().end()) == oracle(203, 120));
    }
}
