// SPDX-License-Identifier: Apache-2.0
//
// masr - movable antenna symbiotic radio link simulator
// Copyright (C) 2026 The masr authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <array>
#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace masr::cli
{
    using Cell = std::variant<double, std::int64_t, std::string>;

    // Column-named rows, serialised as CSV or as a JSON array of objects
    struct Table
    {
        std::vector<std::string> columns;
        std::vector<std::vector<Cell>> rows;

        void add(std::vector<Cell> row)
        {
            if (row.size() != columns.size())
                throw std::logic_error("Table::add: row width does not match header");
            rows.push_back(std::move(row));
        }
    };

    enum class Format
    {
        csv,
        json
    };

    // Shortest decimal that reads back to the same double
    inline std::string format_double(double v)
    {
        std::array<char, 64> buf{};
        auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
        if (ec != std::errc())
            throw std::runtime_error("format_double: conversion failed");
        return std::string(buf.data(), ptr);
    }

    inline std::string to_csv(const Table &t)
    {
        std::string out;
        for (std::size_t i = 0; i < t.columns.size(); ++i)
            out += (i ? "," : "") + t.columns[i];
        out += '\n';
        for (const auto &row : t.rows)
        {
            for (std::size_t i = 0; i < row.size(); ++i)
            {
                if (i)
                    out += ',';
                std::visit([&](const auto &v)
                           {
                    using V = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<V, double>)
                        out += format_double(v);
                    else if constexpr (std::is_same_v<V, std::int64_t>)
                        out += std::to_string(v);
                    else
                        out += v; },
                           row[i]);
            }
            out += '\n';
        }
        return out;
    }

    inline std::string to_json(const Table &t)
    {
        auto arr = nlohmann::ordered_json::array();
        for (const auto &row : t.rows)
        {
            nlohmann::ordered_json obj = nlohmann::ordered_json::object();
            for (std::size_t i = 0; i < row.size(); ++i)
                std::visit([&](const auto &v)
                           { obj[t.columns[i]] = v; },
                           row[i]);
            arr.push_back(std::move(obj));
        }
        return arr.dump(2) + "\n";
    }

    inline std::string render(const Table &t, Format f)
    {
        return f == Format::csv ? to_csv(t) : to_json(t);
    }
}
