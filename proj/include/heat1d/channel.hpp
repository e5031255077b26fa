#pragma once

#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "heat1d/errors.hpp"

namespace heat1d {

namespace detail {

template <typename T>
struct ChannelState {
    explicit ChannelState(std::size_t cap) : ring(cap) {}

    std::mutex mutex;
    std::condition_variable not_empty;
    std::condition_variable not_full;
    std::vector<T> ring;
    std::size_t head = 0;  // oldest message
    std::size_t count = 0;
    std::size_t sent = 0;
    bool producer_open = true;
    bool consumer_open = true;

    // Set while an endpoint operation is in progress. Seeing it already set
    // means two threads drive the same end of the channel.
    std::atomic<bool> producer_busy{false};
    std::atomic<bool> consumer_busy{false};
};

class BusyGuard {
public:
    BusyGuard(std::atomic<bool>& flag, const char* side) : flag_(flag) {
        if (flag_.exchange(true, std::memory_order_acquire))
            throw ProtocolError(std::string("concurrent use of channel ") + side);
    }
    ~BusyGuard() { flag_.store(false, std::memory_order_release); }
    BusyGuard(const BusyGuard&) = delete;
    BusyGuard& operator=(const BusyGuard&) = delete;

private:
    std::atomic<bool>& flag_;
};

}  // namespace detail

template <typename T>
class Consumer;

/// Sending end of a bounded single-producer/single-consumer channel.
/// Move-only; destroying or closing it disconnects the consumer once the
/// buffer drains.
template <typename T>
class Producer {
public:
    Producer() = default;
    Producer(Producer&&) noexcept = default;
    Producer& operator=(Producer&& other) noexcept {
        if (this != &other) {
            close();
            state_ = std::move(other.state_);
        }
        return *this;
    }
    ~Producer() { close(); }

    /// Appends `value`, blocking while the channel is full.
    void send(T value) {
        auto& s = checked();
        detail::BusyGuard guard(s.producer_busy, "producer");
        {
            std::unique_lock lock(s.mutex);
            s.not_full.wait(lock, [&] { return s.count < s.ring.size() || !s.consumer_open; });
            if (!s.consumer_open) throw Disconnected();
            s.ring[(s.head + s.count) % s.ring.size()] = std::move(value);
            ++s.count;
            ++s.sent;
        }
        s.not_empty.notify_one();
    }

    void close() noexcept {
        if (!state_) return;
        {
            std::lock_guard lock(state_->mutex);
            state_->producer_open = false;
        }
        state_->not_empty.notify_all();
    }

    bool valid() const noexcept { return static_cast<bool>(state_); }

    /// Messages accepted over the channel's lifetime.
    std::size_t sent_count() const {
        std::lock_guard lock(state_->mutex);
        return state_->sent;
    }

    std::size_t buffered() const {
        std::lock_guard lock(state_->mutex);
        return state_->count;
    }

    std::size_t capacity() const noexcept { return state_->ring.size(); }

private:
    template <typename U>
    friend std::pair<Producer<U>, Consumer<U>> make_channel(std::size_t capacity);

    explicit Producer(std::shared_ptr<detail::ChannelState<T>> state) : state_(std::move(state)) {}

    detail::ChannelState<T>& checked() const {
        if (!state_) throw Disconnected();
        return *state_;
    }

    std::shared_ptr<detail::ChannelState<T>> state_;
};

/// Receiving end of a bounded single-producer/single-consumer channel.
template <typename T>
class Consumer {
public:
    Consumer() = default;
    Consumer(Consumer&&) noexcept = default;
    Consumer& operator=(Consumer&& other) noexcept {
        if (this != &other) {
            close();
            state_ = std::move(other.state_);
        }
        return *this;
    }
    ~Consumer() { close(); }

    /// Removes the oldest message, blocking while the channel is empty.
    /// Throws Disconnected once the producer is gone and nothing is buffered.
    T recv() {
        auto& s = checked();
        detail::BusyGuard guard(s.consumer_busy, "consumer");
        T value;
        {
            std::unique_lock lock(s.mutex);
            s.not_empty.wait(lock, [&] { return s.count > 0 || !s.producer_open; });
            if (s.count == 0) throw Disconnected();
            value = std::move(s.ring[s.head]);
            s.head = (s.head + 1) % s.ring.size();
            --s.count;
        }
        s.not_full.notify_one();
        return value;
    }

    void close() noexcept {
        if (!state_) return;
        {
            std::lock_guard lock(state_->mutex);
            state_->consumer_open = false;
        }
        state_->not_full.notify_all();
    }

    bool valid() const noexcept { return static_cast<bool>(state_); }

    std::size_t buffered() const {
        std::lock_guard lock(state_->mutex);
        return state_->count;
    }

    std::size_t capacity() const noexcept { return state_->ring.size(); }

private:
    template <typename U>
    friend std::pair<Producer<U>, Consumer<U>> make_channel(std::size_t capacity);

    explicit Consumer(std::shared_ptr<detail::ChannelState<T>> state) : state_(std::move(state)) {}

    detail::ChannelState<T>& checked() const {
        if (!state_) throw Disconnected();
        return *state_;
    }

    std::shared_ptr<detail::ChannelState<T>> state_;
};

/// Smallest capacity for which the ghost protocol cannot deadlock: a producer
/// runs at most one step ahead of its neighbour, so two messages can be in flight.
inline constexpr std::size_t min_channel_capacity = 2;

template <typename T>
std::pair<Producer<T>, Consumer<T>> make_channel(std::size_t capacity) {
    if (capacity < min_channel_capacity)
        throw ConfigError("channel capacity must be at least 2, got " + std::to_string(capacity));
    auto state = std::make_shared<detail::ChannelState<T>>(capacity);
    return {Producer<T>(state), Consumer<T>(std::move(state))};
}

}  // namespace heat1d
