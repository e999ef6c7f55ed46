import './style.css';
import { ServiceClient } from './api';
import { mountWorkbench } from './workbench';

// Service base URL is the only configuration; override with ?api=http://host:port
const DEFAULT_BASE_URL = 'http://127.0.0.1:8080';

function baseUrl(): string {
  const fromQuery = new URLSearchParams(window.location.search).get('api');
  return (fromQuery ?? DEFAULT_BASE_URL).replace(/\/+$/, '');
}

const root = document.querySelector<HTMLDivElement>('#app');
if (!root) throw new Error('missing #app mount point');
mountWorkbench(root, new ServiceClient(baseUrl()));
