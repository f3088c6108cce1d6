#pragma once

#include "qrep/catalog.hpp"
#include "qrep/faber.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace qrep {

/// Builds coefficient grids of catalog functions on demand and keeps them.
///
/// A request is served by any held grid that covers it. With a cache
/// directory, covering grids on disk are loaded instead of rebuilt and new
/// grids are written there.
class GridStore {
public:
    explicit GridStore(const Catalog& catalog, std::optional<std::filesystem::path> cache_dir = std::nullopt);

    std::shared_ptr<const CoefficientGrid> get(const std::string& name, std::int64_t m_max, std::int64_t n_max);

    const Catalog& catalog() const { return catalog_; }

    static std::filesystem::path cache_file(const std::filesystem::path& dir, const std::string& name, std::int64_t m_max,
                                            std::int64_t n_max);

private:
    std::shared_ptr<const CoefficientGrid> from_disk(const std::string& name, std::int64_t m_max, std::int64_t n_max) const;

    const Catalog& catalog_;
    std::optional<std::filesystem::path> cache_dir_;
    std::mutex mutex_;
    std::multimap<std::string, std::shared_ptr<const CoefficientGrid>> held_;
};

} // namespace qrep
