import { defineConfig } from "vitest/config";

// The studio talks only to the /v1 API; during development the service runs
// separately (vizsmith serve) and vite proxies to it.
export default defineConfig({
  server: {
    proxy: {
      "/v1": {
        target: process.env.VIZSMITH_API ?? "http://127.0.0.1:8080",
        changeOrigin: true,
      },
    },
  },
  test: {
    environment: "node",
    testTimeout: 30000,
    hookTimeout: 60000,
  },
});
